#ifndef PFL_POLYNOMIAL_HPP
#define PFL_POLYNOMIAL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pfl/monomial.hpp"
#include "pfl/numbers.hpp"

namespace pfl {

enum class FieldKind : std::uint8_t { Rationals, PrimeField };

/// Ambient ring data carried by every polynomial: coefficient field and the
/// term order monomials are kept sorted under. Mixed-context arithmetic is a
/// domain error.
struct PolyContext {
    OrderKind order = OrderKind::Degrevlex;
    FieldKind field = FieldKind::Rationals;
    std::uint32_t prime = 0;  // set iff field == PrimeField

    friend bool operator==(const PolyContext&, const PolyContext&) = default;
};

std::string field_name(const PolyContext& ctx);
PolyContext context_from_names(const std::string& order, const std::string& field);

/// Exact sparse multivariate polynomial. Terms are kept strictly decreasing
/// in the context's term order with nonzero coefficients.
///
/// Over the rationals the stored coefficients are integers with content 1 and
/// positive leading coefficient; `unit()` carries the rational scalar that
/// multiplies them, which keeps coefficient growth in check during basis
/// computations. Over F_p coefficients live in [1, p) and the unit is fixed
/// at 1.
class Polynomial {
public:
    struct Term {
        Monomial mono;
        Int coeff;

        friend bool operator==(const Term&, const Term&) = default;
    };

    Polynomial() = default;  // zero polynomial in the default context
    explicit Polynomial(PolyContext ctx) : ctx_(ctx) {}

    static Polynomial zero(PolyContext ctx) { return Polynomial(ctx); }
    static Polynomial one(PolyContext ctx) { return constant(ctx, 1); }
    static Polynomial constant(PolyContext ctx, const Rational& c);
    static Polynomial variable(PolyContext ctx, VarId v);
    /// Canonical image of matrix entry (i,j): the signed variable or zero.
    static Polynomial matrix_entry(PolyContext ctx, int i, int j, int n);
    /// Builds from arbitrary (monomial, coefficient) pairs; merges and
    /// normalizes. The pairs need not be sorted or distinct.
    static Polynomial from_terms(PolyContext ctx, std::vector<std::pair<Monomial, Rational>> raw);

    const PolyContext& context() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Rational& unit() const { return unit_; }

    /// Total degree; querying the zero polynomial is a domain error.
    int degree() const;
    bool is_homogeneous() const;
    const Monomial& leading_monomial() const;
    /// True coefficient of the leading monomial (unit folded in).
    Rational leading_coefficient() const;
    Rational coefficient_of(const Monomial& m) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    /// Scalar multiple c*f (exact; c may be any rational, zero included).
    Polynomial scaled(const Rational& c) const;
    /// c * m * f for a single term; the workhorse of division loops.
    Polynomial times_term(const Rational& c, const Monomial& m) const;

    /// The canonical associate: same polynomial up to a unit, with the unit
    /// dropped (primitive integer form over Q, monic over F_p). Basis
    /// elements and golden-file polynomials are stored in this form.
    Polynomial associate() const;

    friend bool operator==(const Polynomial& f, const Polynomial& g);

    std::string str() const;

    /// Asserts the representation invariants; throws on violation.
    void check_invariants() const;

private:
    static Polynomial make(PolyContext ctx, Rational unit, std::vector<Term> terms);
    void normalize();

    PolyContext ctx_;
    Rational unit_ = 1;
    std::vector<Term> terms_;
};

/// Remainder of multivariate division of f by the divisor list: no term of
/// the result is divisible by any divisor's leading monomial and f minus the
/// result lies in the ideal the divisors generate. Deterministic for a fixed
/// divisor order (each reducible term is cancelled with the first divisor in
/// list order whose leading monomial divides it). When `quotients` is given
/// it receives q_i with f == sum q_i * d_i + remainder exactly.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       std::vector<Polynomial>* quotients = nullptr);

}  // namespace pfl

#endif
