#include "pfl/poly_text.hpp"

#include <cctype>
#include <cstdlib>

#include "pfl/errors.hpp"

namespace pfl {

std::string poly_to_string(const Polynomial& f)
{
    if (f.is_zero()) return "0";
    std::string out;
    for (const auto& t : f.terms()) {
        Rational c = f.unit() * Rational(t.coeff);
        bool negative = c < 0;
        if (negative) c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? "-" : "+";
        if (t.mono.is_unit()) {
            out += c.str();
        } else {
            if (c != 1) out += c.str() + "*";
            out += t.mono.str();
        }
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(const std::string& s, PolyContext ctx) : s_(s), ctx_(ctx) {}

    Polynomial parse()
    {
        std::vector<std::pair<Monomial, Rational>> terms;
        skip_ws();
        if (eof()) throw domain_error("empty polynomial text");
        // Special-case the bare zero.
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            }
            auto [mono, coeff] = parse_term();
            terms.emplace_back(std::move(mono), coeff * sign);
            skip_ws();
            if (!eof() && peek() != '+' && peek() != '-')
                throw domain_error("unexpected character '" + std::string(1, peek()) +
                                   "' at position " + std::to_string(pos_) + " in polynomial text");
        }
        return Polynomial::from_terms(ctx_, std::move(terms));
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws()
    {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    long parse_int()
    {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw domain_error("expected integer at position " + std::to_string(start));
        return std::strtol(s_.substr(start, pos_ - start).c_str(), nullptr, 10);
    }

    // factor := rational | 'x[' i ',' j ']' ['^' e]
    // term   := factor ('*' factor)*
    std::pair<Monomial, Rational> parse_term()
    {
        Monomial mono;
        Rational coeff = 1;
        bool first = true;
        while (true) {
            skip_ws();
            if (eof()) {
                if (first) throw domain_error("dangling operator in polynomial text");
                break;
            }
            if (peek() == 'x') {
                ++pos_;
                skip_ws();
                if (eof() || peek() != '[') throw domain_error("expected '[' after x");
                ++pos_;
                long i = parse_int();
                skip_ws();
                if (eof() || peek() != ',') throw domain_error("expected ',' in variable");
                ++pos_;
                long j = parse_int();
                skip_ws();
                if (eof() || peek() != ']') throw domain_error("expected ']' in variable");
                ++pos_;
                int e = 1;
                skip_ws();
                if (!eof() && peek() == '^') {
                    ++pos_;
                    e = static_cast<int>(parse_int());
                }
                if (i == j) {
                    coeff = 0;  // diagonal entry of the skew matrix
                } else {
                    if (i > j) {
                        std::swap(i, j);
                        if (e % 2 == 1) coeff = -coeff;
                    }
                    mono = mono * Monomial::var(VarId{static_cast<int>(i), static_cast<int>(j)}, e);
                }
            } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
                Int num(parse_int());
                Int den = 1;
                skip_ws();
                if (!eof() && peek() == '/') {
                    ++pos_;
                    den = Int(parse_int());
                    if (den.is_zero()) throw domain_error("zero denominator in coefficient");
                }
                coeff *= Rational(num, den);
            } else {
                throw domain_error("unexpected character '" + std::string(1, peek()) +
                                   "' at position " + std::to_string(pos_) + " in polynomial text");
            }
            first = false;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        return {std::move(mono), std::move(coeff)};
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    PolyContext ctx_;
};

}  // namespace

Polynomial parse_poly(const std::string& text, PolyContext ctx)
{
    return Parser(text, ctx).parse();
}

}  // namespace pfl
