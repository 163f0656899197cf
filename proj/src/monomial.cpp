#include "pfl/monomial.hpp"

#include <algorithm>
#include <cassert>

#include "pfl/errors.hpp"

namespace pfl {

std::string order_name(OrderKind k)
{
    return k == OrderKind::Degrevlex ? "degrevlex" : "lex";
}

OrderKind order_from_name(const std::string& s)
{
    if (s == "degrevlex") return OrderKind::Degrevlex;
    if (s == "lex") return OrderKind::Lex;
    throw domain_error("unknown term order '" + s + "' (expected degrevlex or lex)");
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& x, const Factor& y) { return x.first < y.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e < 0) throw domain_error("monomial exponent must be nonnegative");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
        m.degree_ += e;
    }
    return m;
}

Monomial Monomial::var(VarId v, int exp)
{
    return from_factors({{v, exp}});
}

int Monomial::exponent(VarId v) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, VarId w) { return f.first < w; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::vector<VarId> Monomial::support() const
{
    std::vector<VarId> s;
    s.reserve(factors_.size());
    for (const auto& [v, e] : factors_) s.push_back(v);
    return s;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial m;
    m.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
            m.factors_.push_back(*ia++);
        else if (ia == a.factors_.end() || ib->first < ia->first)
            m.factors_.push_back(*ib++);
        else {
            m.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia, ++ib;
        }
    }
    m.degree_ = a.degree_ + b.degree_;
    return m;
}

bool divides(const Monomial& a, const Monomial& b)
{
    auto ib = b.factors().begin();
    for (const auto& [v, e] : a.factors()) {
        while (ib != b.factors().end() && ib->first < v) ++ib;
        if (ib == b.factors().end() || ib->first != v || ib->second < e) return false;
    }
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a)
{
    std::vector<Monomial::Factor> out;
    auto ia = a.factors().begin();
    for (const auto& [v, e] : b.factors()) {
        int sub = 0;
        if (ia != a.factors().end() && ia->first == v) sub = (ia++)->second;
        if (sub > e) throw domain_error("monomial quotient: not divisible");
        if (e - sub > 0) out.emplace_back(v, e - sub);
    }
    if (ia != a.factors().end()) throw domain_error("monomial quotient: not divisible");
    return Monomial::from_factors(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    std::vector<Monomial::Factor> out;
    auto ia = a.factors().begin(), ib = b.factors().begin();
    while (ia != a.factors().end() || ib != b.factors().end()) {
        if (ib == b.factors().end() || (ia != a.factors().end() && ia->first < ib->first))
            out.push_back(*ia++);
        else if (ia == a.factors().end() || ib->first < ia->first)
            out.push_back(*ib++);
        else {
            out.emplace_back(ia->first, std::max(ia->second, ib->second));
            ++ia, ++ib;
        }
    }
    return Monomial::from_factors(std::move(out));
}

bool coprime(const Monomial& a, const Monomial& b)
{
    auto ia = a.factors().begin(), ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else
            return false;
    }
    return true;
}

namespace {

// Graded reverse lexicographic: higher total degree wins; on equal degree the
// monomial with the larger exponent at the least-precedence end is smaller.
int cmp_degrevlex(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    auto ia = a.factors().rbegin(), ib = b.factors().rbegin();
    while (ia != a.factors().rend() && ib != b.factors().rend()) {
        if (ia->first != ib->first) return ia->first > ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    // Equal degrees with one factor list a suffix of the other can only
    // happen when both are exhausted.
    assert(ia == a.factors().rend() && ib == b.factors().rend());
    return 0;
}

int cmp_lex(const Monomial& a, const Monomial& b)
{
    auto ia = a.factors().begin(), ib = b.factors().begin();
    while (ia != a.factors().end() && ib != b.factors().end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? 1 : -1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    if (ia != a.factors().end()) return 1;
    if (ib != b.factors().end()) return -1;
    return 0;
}

}  // namespace

int mono_cmp(const Monomial& a, const Monomial& b, OrderKind order)
{
    return order == OrderKind::Degrevlex ? cmp_degrevlex(a, b) : cmp_lex(a, b);
}

std::string Monomial::str() const
{
    if (is_unit()) return "1";
    std::string s;
    for (const auto& [v, e] : factors_) {
        if (!s.empty()) s += "*";
        s += var_name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace pfl
