#include "pfl/polynomial.hpp"

#include <algorithm>
#include <map>

#include "pfl/errors.hpp"

namespace pfl {

namespace {

void require_same_context(const Polynomial& f, const Polynomial& g)
{
    if (!(f.context() == g.context()))
        throw domain_error("polynomial arithmetic across different fields or term orders");
}

Int mod_p(Int a, std::uint32_t p)
{
    a %= p;
    if (a < 0) a += p;
    return a;
}

// Inverse of a mod p, p prime.
Int inv_mod_p(const Int& a, std::uint32_t p)
{
    Int t = 0, new_t = 1, r = p, new_r = mod_p(a, p);
    if (new_r.is_zero()) throw domain_error("division by zero in F_p");
    while (!new_r.is_zero()) {
        Int q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    return mod_p(t, p);
}

}  // namespace

std::string field_name(const PolyContext& ctx)
{
    if (ctx.field == FieldKind::Rationals) return "rat";
    return "fp:" + std::to_string(ctx.prime);
}

PolyContext context_from_names(const std::string& order, const std::string& field)
{
    PolyContext ctx;
    ctx.order = order_from_name(order);
    if (field == "rat") {
        ctx.field = FieldKind::Rationals;
    } else if (field.rfind("fp:", 0) == 0) {
        long p = 0;
        try {
            p = std::stol(field.substr(3));
        } catch (const std::exception&) {
            throw domain_error("bad prime in field spec '" + field + "'");
        }
        if (p < 2 || p > 2147483647) throw domain_error("prime out of range in '" + field + "'");
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw domain_error(std::to_string(p) + " is not prime");
        ctx.field = FieldKind::PrimeField;
        ctx.prime = static_cast<std::uint32_t>(p);
    } else {
        throw domain_error("unknown field '" + field + "' (expected rat or fp:P)");
    }
    return ctx;
}

Polynomial Polynomial::make(PolyContext ctx, Rational unit, std::vector<Term> terms)
{
    Polynomial f(ctx);
    f.unit_ = std::move(unit);
    f.terms_ = std::move(terms);
    f.normalize();
    return f;
}

// Restores the invariants: strips zero coefficients, and either clears
// content / fixes the leading sign (rationals) or reduces mod p and pins the
// unit to 1 (prime field). Assumes terms_ already sorted strictly decreasing.
void Polynomial::normalize()
{
    if (ctx_.field == FieldKind::PrimeField) {
        const std::uint32_t p = ctx_.prime;
        Int scale = numerator(unit_) * inv_mod_p(denominator(unit_), p);
        scale = mod_p(scale, p);
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            Int c = mod_p(t.coeff * scale, p);
            if (!c.is_zero()) out.push_back(Term{std::move(t.mono), std::move(c)});
        }
        terms_ = std::move(out);
        unit_ = 1;
        return;
    }
    std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
    if (terms_.empty()) {
        unit_ = 1;
        return;
    }
    Int content = 0;
    for (const auto& t : terms_) {
        content = gcd_int(content, t.coeff);
        if (content == 1) break;
    }
    if (terms_.front().coeff < 0) content = -content;
    if (content != 1) {
        for (auto& t : terms_) t.coeff /= content;
        unit_ *= Rational(content);
    }
    if (unit_.is_zero()) terms_.clear(), unit_ = 1;
}

Polynomial Polynomial::constant(PolyContext ctx, const Rational& c)
{
    if (c.is_zero()) return zero(ctx);
    return make(ctx, c, {Term{Monomial{}, 1}});
}

Polynomial Polynomial::variable(PolyContext ctx, VarId v)
{
    return make(ctx, 1, {Term{Monomial::var(v), 1}});
}

Polynomial Polynomial::matrix_entry(PolyContext ctx, int i, int j, int n)
{
    SignedVar sv = make_var(i, j, n);
    if (sv.is_zero()) return zero(ctx);
    return make(ctx, sv.sign, {Term{Monomial::var(*sv.var), 1}});
}

Polynomial Polynomial::from_terms(PolyContext ctx, std::vector<std::pair<Monomial, Rational>> raw)
{
    std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> acc(
        ctx.order == OrderKind::Degrevlex
            ? +[](const Monomial& a, const Monomial& b) {
                  return mono_cmp(a, b, OrderKind::Degrevlex) > 0;
              }
            : +[](const Monomial& a, const Monomial& b) {
                  return mono_cmp(a, b, OrderKind::Lex) > 0;
              });
    for (auto& [m, c] : raw) acc[m] += c;

    // Clear denominators so the stored coefficients are integral.
    Int den = 1;
    for (const auto& [m, c] : acc) den = den / gcd_int(den, denominator(c)) * denominator(c);
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (const auto& [m, c] : acc) {
        Int ci = numerator(c) * (den / denominator(c));
        if (!ci.is_zero()) terms.push_back(Term{m, std::move(ci)});
    }
    return make(ctx, Rational(1, den), std::move(terms));
}

int Polynomial::degree() const
{
    if (is_zero()) throw domain_error("degree of the zero polynomial is undefined");
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const
{
    if (is_zero()) return true;
    const int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

const Monomial& Polynomial::leading_monomial() const
{
    if (is_zero()) throw domain_error("leading monomial of the zero polynomial is undefined");
    return terms_.front().mono;
}

Rational Polynomial::leading_coefficient() const
{
    if (is_zero()) throw domain_error("leading coefficient of the zero polynomial is undefined");
    return unit_ * Rational(terms_.front().coeff);
}

Rational Polynomial::coefficient_of(const Monomial& m) const
{
    for (const auto& t : terms_) {
        int c = mono_cmp(t.mono, m, ctx_.order);
        if (c == 0) return unit_ * Rational(t.coeff);
        if (c < 0) break;  // terms are decreasing; m can no longer appear
    }
    return 0;
}

Polynomial Polynomial::operator-() const
{
    return scaled(-1);
}

Polynomial operator+(const Polynomial& f, const Polynomial& g)
{
    require_same_context(f, g);
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;

    // Cross-multiply the units into integer scalars sharing one denominator.
    const Int dc = [&] {
        Int df = denominator(f.unit_), dg = denominator(g.unit_);
        return df / gcd_int(df, dg) * dg;
    }();
    const Int cf = numerator(f.unit_) * (dc / denominator(f.unit_));
    const Int cg = numerator(g.unit_) * (dc / denominator(g.unit_));

    std::vector<Polynomial::Term> out;
    out.reserve(f.terms_.size() + g.terms_.size());
    auto ia = f.terms_.begin(), ib = g.terms_.begin();
    while (ia != f.terms_.end() || ib != g.terms_.end()) {
        int c;
        if (ia == f.terms_.end())
            c = -1;
        else if (ib == g.terms_.end())
            c = 1;
        else
            c = mono_cmp(ia->mono, ib->mono, f.ctx_.order);
        if (c > 0) {
            out.push_back(Polynomial::Term{ia->mono, cf * ia->coeff});
            ++ia;
        } else if (c < 0) {
            out.push_back(Polynomial::Term{ib->mono, cg * ib->coeff});
            ++ib;
        } else {
            Int s = cf * ia->coeff + cg * ib->coeff;
            if (!s.is_zero()) out.push_back(Polynomial::Term{ia->mono, std::move(s)});
            ++ia, ++ib;
        }
    }
    return Polynomial::make(f.ctx_, Rational(1, dc), std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g)
{
    return f + g.scaled(-1);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g)
{
    require_same_context(f, g);
    if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.ctx_);

    std::map<Monomial, Int, bool (*)(const Monomial&, const Monomial&)> acc(
        f.ctx_.order == OrderKind::Degrevlex
            ? +[](const Monomial& a, const Monomial& b) {
                  return mono_cmp(a, b, OrderKind::Degrevlex) > 0;
              }
            : +[](const Monomial& a, const Monomial& b) {
                  return mono_cmp(a, b, OrderKind::Lex) > 0;
              });
    for (const auto& ta : f.terms_)
        for (const auto& tb : g.terms_) acc[ta.mono * tb.mono] += ta.coeff * tb.coeff;

    std::vector<Polynomial::Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.push_back(Polynomial::Term{m, std::move(c)});
    return Polynomial::make(f.ctx_, f.unit_ * g.unit_, std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    if (c.is_zero() || is_zero()) return zero(ctx_);
    return make(ctx_, unit_ * c, terms_);
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const
{
    if (c.is_zero() || is_zero()) return zero(ctx_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{m * t.mono, t.coeff});
    return make(ctx_, unit_ * c, std::move(out));
}

Polynomial Polynomial::associate() const
{
    if (is_zero()) return *this;
    if (ctx_.field == FieldKind::PrimeField) {
        Polynomial f = *this;
        Int inv = inv_mod_p(f.terms_.front().coeff, ctx_.prime);
        for (auto& t : f.terms_) t.coeff = mod_p(t.coeff * inv, ctx_.prime);
        return f;
    }
    Polynomial f = *this;
    f.unit_ = 1;
    return f;
}

bool operator==(const Polynomial& f, const Polynomial& g)
{
    return f.ctx_ == g.ctx_ && f.unit_ == g.unit_ && f.terms_ == g.terms_;
}

void Polynomial::check_invariants() const
{
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff.is_zero()) throw verification_error("zero coefficient stored");
        if (i + 1 < terms_.size() &&
            mono_cmp(terms_[i].mono, terms_[i + 1].mono, ctx_.order) <= 0)
            throw verification_error("terms not strictly decreasing");
    }
    if (ctx_.field == FieldKind::Rationals && !terms_.empty()) {
        Int content = 0;
        for (const auto& t : terms_) content = gcd_int(content, t.coeff);
        if (content != 1) throw verification_error("content not cleared");
        if (terms_.front().coeff < 0) throw verification_error("negative leading coefficient");
    }
    if (ctx_.field == FieldKind::PrimeField) {
        if (unit_ != 1) throw verification_error("prime-field polynomial with unit != 1");
        for (const auto& t : terms_)
            if (t.coeff <= 0 || t.coeff >= ctx_.prime)
                throw verification_error("coefficient not reduced mod p");
    }
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       std::vector<Polynomial>* quotients)
{
    for (const auto& d : divisors) {
        if (d.is_zero()) throw domain_error("normal_form: zero divisor");
        if (!(d.context() == f.context()))
            throw domain_error("normal_form: divisor in a different ring");
    }
    if (quotients) quotients->assign(divisors.size(), Polynomial::zero(f.context()));

    Polynomial remainder = Polynomial::zero(f.context());
    Polynomial work = f;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!divides(divisors[i].leading_monomial(), lm)) continue;
            Rational c = work.leading_coefficient() / divisors[i].leading_coefficient();
            Monomial q = quotient(lm, divisors[i].leading_monomial());
            work -= divisors[i].times_term(c, q);
            if (quotients)
                (*quotients)[i] += Polynomial::constant(f.context(), c).times_term(1, q);
            reduced = true;
            break;
        }
        if (!reduced) {
            // Move the irreducible leading term to the remainder.
            Polynomial lt = Polynomial::from_terms(
                f.context(), {{lm, work.leading_coefficient()}});
            remainder += lt;
            work -= lt;
        }
    }
    return remainder;
}

}  // namespace pfl
