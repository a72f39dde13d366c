#include "curvediff/parser.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace curvediff {

namespace {

constexpr int kMaxExponent = 512;

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    size_t offset;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Tok::number, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Tok::ident, s.substr(start, i - start), start});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, s.substr(start, 1), start});
        ++i;
    }
    out.push_back({Tok::end, "", s.size()});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> toks, const std::map<std::string, Rat>& params)
        : toks_(std::move(toks)), params_(params) {}

    QRatFunc run() {
        QRatFunc v = expr();
        if (peek().kind != Tok::end) throw ParseError("trailing input", peek().offset);
        return v;
    }

  private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool accept(Tok k) {
        if (peek().kind == k) {
            ++pos_;
            return true;
        }
        return false;
    }

    QRatFunc expr() {
        QRatFunc v = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            Token op = take();
            QRatFunc rhs = term();
            v = op.kind == Tok::plus ? v + rhs : v - rhs;
        }
        return v;
    }

    QRatFunc term() {
        QRatFunc v = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            Token op = take();
            QRatFunc rhs = unary();
            if (op.kind == Tok::star) {
                v *= rhs;
            } else {
                if (rhs.is_zero())
                    throw ParseError("division by the zero function", op.offset);
                v /= rhs;
            }
        }
        return v;
    }

    QRatFunc unary() {
        if (accept(Tok::minus)) return -unary();
        return power();
    }

    QRatFunc power() {
        QRatFunc base = atom();
        if (accept(Tok::caret)) {
            int e = exponent();
            if (e < 0 && base.is_zero())
                throw ParseError("negative power of zero", peek().offset);
            base = base.pow(e);
        }
        return base;
    }

    int exponent() {
        size_t at = peek().offset;
        bool neg = accept(Tok::minus);
        if (peek().kind == Tok::number) {
            Rat v(take().text);
            return checked_exponent(neg ? Rat(-v) : v, at);
        }
        if (peek().kind == Tok::lparen) {
            // allow a parenthesized constant, but it must be an integer
            take();
            QRatFunc v = expr();
            if (!accept(Tok::rparen)) throw ParseError("expected ')'", peek().offset);
            if (!v.is_constant()) throw ParseError("non-constant exponent", at);
            Rat c = v.constant_value();
            return checked_exponent(neg ? Rat(-c) : c, at);
        }
        throw ParseError("expected integer exponent", at);
    }

    int checked_exponent(const Rat& v, size_t at) {
        if (v.get_den() != 1) throw ParseError("non-integer exponent", at);
        if (abs(v.get_num()) > kMaxExponent) throw ParseError("exponent too large", at);
        return static_cast<int>(v.get_num().get_si());
    }

    QRatFunc atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::number: {
                Token num = take();
                // rational literal: integer optionally followed by /integer
                if (peek().kind == Tok::slash && toks_[pos_ + 1].kind == Tok::number) {
                    take();
                    Token den = take();
                    if (den.text.find_first_not_of('0') == std::string::npos)
                        throw ParseError("zero denominator", den.offset);
                    return QRatFunc(QPoly(rat_from_string(num.text + "/" + den.text)));
                }
                return QRatFunc(QPoly(rat_from_string(num.text)));
            }
            case Tok::ident: {
                Token id = take();
                if (id.text == "t") return QRatFunc::t();
                auto it = params_.find(id.text);
                if (it == params_.end())
                    throw ParseError("unbound identifier '" + id.text + "'", id.offset);
                return QRatFunc(QPoly(it->second));
            }
            case Tok::lparen: {
                take();
                QRatFunc v = expr();
                if (!accept(Tok::rparen)) throw ParseError("expected ')'", peek().offset);
                return v;
            }
            default:
                throw ParseError("expected a value", tok.offset);
        }
    }

    std::vector<Token> toks_;
    const std::map<std::string, Rat>& params_;
    size_t pos_ = 0;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

} // namespace

QRatFunc parse_expr(const std::string& text, const std::map<std::string, Rat>& params) {
    return Parser(tokenize(text), params).run();
}

CurveSpec parse_curve_spec(const std::string& text) {
    CurveSpec spec;
    bool have_x = false, have_y = false;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("curve spec line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "name") {
            spec.name = value;
        } else if (key == "x") {
            spec.x_expr = value;
            have_x = true;
        } else if (key == "y") {
            spec.y_expr = value;
            have_y = true;
        } else if (key.rfind("param ", 0) == 0) {
            std::string ident = trim(key.substr(6));
            if (ident.empty() || ident == "t")
                throw Error("curve spec line " + std::to_string(lineno) + ": bad parameter name");
            spec.params[ident] = rat_from_string(value);
        } else {
            throw Error("curve spec line " + std::to_string(lineno) + ": unknown key '" + key +
                        "'");
        }
    }
    if (!have_x || !have_y) throw Error("curve spec needs both x and y");
    return spec;
}

PlaneCurve build_curve(const CurveSpec& spec) {
    QRatFunc x = parse_expr(spec.x_expr, spec.params);
    QRatFunc y = parse_expr(spec.y_expr, spec.params);
    return PlaneCurve(x, y, spec.name);
}

std::string to_expr_string(const QRatFunc& f) {
    if (f.is_polynomial()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

} // namespace curvediff
