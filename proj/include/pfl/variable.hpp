#ifndef PFL_VARIABLE_HPP
#define PFL_VARIABLE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "pfl/errors.hpp"

namespace pfl {

/// Canonical indeterminate x_{i,j} of the skew-symmetric matrix, always
/// stored with row < col. The total order on variables (lexicographic on
/// (row, col)) doubles as the variable precedence of every term order.
struct VarId {
    std::int32_t row = 0;
    std::int32_t col = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Entry (i,j) of the matrix resolved to its canonical representative:
/// +x_{i,j} when i<j, -x_{j,i} when i>j, and zero on the diagonal.
struct SignedVar {
    std::optional<VarId> var;  // empty <=> the zero entry
    int sign = 0;              // +1 / -1; 0 iff zero entry

    bool is_zero() const { return !var.has_value(); }
};

inline SignedVar make_var(int i, int j, int n)
{
    if (i < 1 || i > n || j < 1 || j > n)
        throw domain_error("make_var: index (" + std::to_string(i) + "," + std::to_string(j) +
                           ") out of [1," + std::to_string(n) + "]");
    if (i == j) return SignedVar{};
    if (i < j) return SignedVar{VarId{i, j}, +1};
    return SignedVar{VarId{j, i}, -1};
}

inline std::string var_name(VarId v)
{
    return "x[" + std::to_string(v.row) + "," + std::to_string(v.col) + "]";
}

}  // namespace pfl

#endif
