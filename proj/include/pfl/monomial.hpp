#ifndef PFL_MONOMIAL_HPP
#define PFL_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pfl/variable.hpp"

namespace pfl {

enum class OrderKind : std::uint8_t { Degrevlex, Lex };

std::string order_name(OrderKind k);
OrderKind order_from_name(const std::string& s);

/// Power product of matrix indeterminates. Exponent pairs are kept sorted by
/// ascending VarId (highest precedence first) with all exponents positive;
/// the empty list is the unit monomial.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    static Monomial from_factors(std::vector<Factor> factors);
    static Monomial var(VarId v, int exp = 1);

    bool is_unit() const { return factors_.empty(); }
    int degree() const { return degree_; }
    int exponent(VarId v) const;
    const std::vector<Factor>& factors() const { return factors_; }
    std::vector<VarId> support() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.factors_ == b.factors_;
    }

    std::string str() const;

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

/// True iff a divides b componentwise.
bool divides(const Monomial& a, const Monomial& b);

/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);

Monomial lcm(const Monomial& a, const Monomial& b);

/// gcd(a, b) == 1, i.e. disjoint supports.
bool coprime(const Monomial& a, const Monomial& b);

/// Three-way comparison in the given term order: -1 if a < b, 0, +1.
/// Variable precedence is the fixed VarId order, x[1,2] largest.
int mono_cmp(const Monomial& a, const Monomial& b, OrderKind order);

}  // namespace pfl

#endif
