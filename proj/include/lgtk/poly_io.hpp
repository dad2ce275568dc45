#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "lgtk/polynomial.hpp"

namespace lgtk {

// Text form of polynomials. The printer emits a canonical string (terms
// sorted descending under the active monomial order) that the parser accepts
// back unchanged, so printed output round-trips exactly.
//
// Grammar:
//   poly     := [sign] term { sign term }
//   term     := factor { "*" factor }
//   factor   := rational | "(" gaussian ")" | "i" | var [ "^" int ]
//   gaussian := [sign] gpart { sign gpart }     gpart := rational ["*" "i"] | "i"
//   rational := int [ "/" int ]

namespace detail {

enum class Tok { integer, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : src_(src), pos_(0) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ >= src_.size()) {
            tok_ = {Tok::end, "", pos_};
            return;
        }
        char c = src_[pos_];
        std::size_t start = pos_;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = pos_;
            while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
            tok_ = {Tok::integer, src_.substr(pos_, j - pos_), start};
            pos_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = pos_;
            while (j < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
                ++j;
            tok_ = {Tok::ident, src_.substr(pos_, j - pos_), start};
            pos_ = j;
            return;
        }
        ++pos_;
        switch (c) {
            case '+': tok_ = {Tok::plus, "+", start}; return;
            case '-': tok_ = {Tok::minus, "-", start}; return;
            case '*': tok_ = {Tok::star, "*", start}; return;
            case '/': tok_ = {Tok::slash, "/", start}; return;
            case '^': tok_ = {Tok::caret, "^", start}; return;
            case '(': tok_ = {Tok::lparen, "(", start}; return;
            case ')': tok_ = {Tok::rparen, ")", start}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
    }

    const std::string& src_;
    std::size_t pos_;
    Token tok_;
};

class PolyParser {
public:
    PolyParser(const std::string& src, const std::vector<std::string>& vars)
        : lex_(src), vars_(vars) {}

    Polynomial parse() {
        Polynomial p(static_cast<int>(vars_.size()));
        bool negative = consume_sign(false);
        p += parse_term(negative);
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            bool neg = lex_.take().kind == Tok::minus;
            p += parse_term(neg);
        }
        if (lex_.peek().kind != Tok::end)
            throw ParseError("trailing input after polynomial", lex_.peek().pos);
        return p;
    }

private:
    bool consume_sign(bool required) {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            return true;
        }
        if (lex_.peek().kind == Tok::plus) {
            lex_.take();
            return false;
        }
        if (required) throw ParseError("expected '+' or '-'", lex_.peek().pos);
        return false;
    }

    Rational parse_rational() {
        Token t = lex_.take();
        if (t.kind != Tok::integer) throw ParseError("expected a number", t.pos);
        Rational num = Rational(Integer(t.text));
        if (lex_.peek().kind == Tok::slash) {
            lex_.take();
            Token d = lex_.take();
            if (d.kind != Tok::integer) throw ParseError("expected a denominator", d.pos);
            Rational den = Rational(Integer(d.text));
            if (den == 0) throw ParseError("zero denominator", d.pos);
            num /= den;
        }
        return num;
    }

    // Inside parentheses: a signed sum of rational / rational*i / i parts.
    GaussianRational parse_gaussian() {
        GaussianRational acc;
        bool first = true;
        while (true) {
            bool neg;
            if (first) {
                neg = consume_sign(false);
                first = false;
            } else if (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
                neg = lex_.take().kind == Tok::minus;
            } else {
                break;
            }
            GaussianRational part;
            if (lex_.peek().kind == Tok::ident && lex_.peek().text == "i") {
                lex_.take();
                part = GaussianRational::i();
            } else {
                Rational r = parse_rational();
                part = GaussianRational(r);
                if (lex_.peek().kind == Tok::star) {
                    lex_.take();
                    Token t = lex_.take();
                    if (t.kind != Tok::ident || t.text != "i")
                        throw ParseError("expected 'i' after '*' in coefficient", t.pos);
                    part = GaussianRational(Rational(0), r);
                }
            }
            acc += neg ? -part : part;
        }
        Token close = lex_.take();
        if (close.kind != Tok::rparen) throw ParseError("expected ')'", close.pos);
        return acc;
    }

    Polynomial parse_term(bool negative) {
        GaussianRational coeff(negative ? -1 : 1);
        Exponents exps(vars_.size(), 0);
        bool expect_factor = true;
        while (expect_factor) {
            Token t = lex_.peek();
            switch (t.kind) {
                case Tok::integer: coeff *= GaussianRational(parse_rational()); break;
                case Tok::lparen:
                    lex_.take();
                    coeff *= parse_gaussian();
                    break;
                case Tok::ident: {
                    lex_.take();
                    if (t.text == "i" && var_index(t.text) < 0) {
                        coeff *= GaussianRational::i();
                        break;
                    }
                    int idx = var_index(t.text);
                    if (idx < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
                    int e = 1;
                    if (lex_.peek().kind == Tok::caret) {
                        lex_.take();
                        Token p = lex_.take();
                        if (p.kind != Tok::integer) throw ParseError("expected an exponent", p.pos);
                        if (p.text.size() > 6) throw ParseError("exponent too large", p.pos);
                        e = std::stoi(p.text);
                    }
                    exps[static_cast<std::size_t>(idx)] += e;
                    break;
                }
                default: throw ParseError("expected a factor", t.pos);
            }
            if (lex_.peek().kind == Tok::star)
                lex_.take();
            else
                expect_factor = false;
        }
        return Polynomial::monomial(static_cast<int>(vars_.size()), exps, coeff);
    }

    int var_index(const std::string& name) const {
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k] == name) return static_cast<int>(k);
        return -1;
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& src, const std::vector<std::string>& vars) {
    return detail::PolyParser(src, vars).parse();
}

inline void validate_variable_names(const std::vector<std::string>& vars) {
    if (vars.empty()) throw Error(errc::parse_error, "no variables declared");
    for (std::size_t k = 0; k < vars.size(); ++k) {
        const std::string& v = vars[k];
        if (v.empty()) throw Error(errc::parse_error, "empty variable name");
        if (v == "i") throw Error(errc::parse_error, "'i' is reserved for the imaginary unit");
        if (!std::isalpha(static_cast<unsigned char>(v[0])) && v[0] != '_')
            throw Error(errc::parse_error, "variable name '" + v + "' must start with a letter");
        for (char c : v)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw Error(errc::parse_error, "variable name '" + v + "' has invalid characters");
        for (std::size_t j = k + 1; j < vars.size(); ++j)
            if (vars[j] == v) throw Error(errc::parse_error, "duplicate variable name '" + v + "'");
    }
}

inline std::vector<std::string> default_variable_names(int num_vars) {
    std::vector<std::string> v;
    v.reserve(static_cast<std::size_t>(num_vars));
    for (int k = 1; k <= num_vars; ++k) v.push_back("x" + std::to_string(k));
    return v;
}

inline std::string monomial_to_string(const Exponents& e, const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[k];
        if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
}

inline std::string to_string(const Polynomial& p, const std::vector<std::string>& vars,
                             const MonomialOrder& order = MonomialOrder()) {
    if (p.is_zero()) return "0";
    if (static_cast<int>(vars.size()) != p.num_vars())
        throw Error(errc::shape_mismatch, "variable name list does not match polynomial ring");
    std::vector<std::pair<Exponents, GaussianRational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [&order](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
    std::string out;
    for (const auto& [e, c] : terms) {
        std::string mono = monomial_to_string(e, vars);
        std::string part;
        if (mono.empty())
            part = c.str();
        else if (c.is_one())
            part = mono;
        else if (c == GaussianRational(-1))
            part = "-" + mono;
        else
            part = c.str() + "*" + mono;
        if (out.empty())
            out = part;
        else if (part[0] == '-')
            out += " - " + part.substr(1);
        else
            out += " + " + part;
    }
    return out;
}

// Parses a bare coefficient ("i", "-1/2", "(1+2*i)") via the zero-variable
// polynomial grammar; used for normalization overrides in problem files.
inline GaussianRational parse_coefficient(const std::string& src) {
    Polynomial p = parse_polynomial(src, {});
    return p.constant_term();
}

}  // namespace lgtk
