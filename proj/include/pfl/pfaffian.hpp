#ifndef PFL_PFAFFIAN_HPP
#define PFL_PFAFFIAN_HPP

#include <vector>

#include "pfl/polynomial.hpp"

namespace pfl {

/// An even-length list of row/column indices, in the order written. Pfaffian
/// brackets follow tuple semantics: sorting the tuple costs the sign of the
/// permutation, and a repeated index makes the bracket vanish.
class IndexTuple {
public:
    IndexTuple() = default;
    explicit IndexTuple(std::vector<int> indices);

    std::size_t size() const { return raw_.size(); }
    bool empty() const { return raw_.empty(); }
    const std::vector<int>& raw() const { return raw_; }
    const std::vector<int>& sorted() const { return sorted_; }
    int sort_sign() const { return sort_sign_; }
    bool has_repeat() const { return has_repeat_; }

private:
    std::vector<int> raw_;
    std::vector<int> sorted_;
    int sort_sign_ = 1;
    bool has_repeat_ = false;
};

/// The pfaffian [u_1,...,u_2p] of the generic skew-symmetric matrix,
/// computed by expansion along the first index. [] = 1; repeats give 0;
/// unsorted tuples pick up the sign of the sorting permutation.
Polynomial pfaffian(const IndexTuple& tu, int n, const PolyContext& ctx = {});

/// Independent oracle for the same value: the signed sum over perfect
/// matchings of the index set, each matching weighted by the parity of its
/// crossing number.
Polynomial pfaffian_matchings(const IndexTuple& tu, int n, const PolyContext& ctx = {});

/// Left-hand side minus right-hand side of the De Concini--Procesi pfaffian
/// relation for the tuples c (length p) and d (length m):
///
///   [c1..cp][d1..dm] - sum_h [c1..c_{h-1},d1,c_{h+1}..cp][c_h,d2..dm]
///                    - sum_{k>=2} (-1)^{k-1} [d_k,d_1,c1..cp][d2..^d_k..dm]
///
/// Identically zero for every choice of tuples; callers assert exactly that.
Polynomial dcp_residual(const IndexTuple& c, const IndexTuple& d, int n,
                        const PolyContext& ctx = {});

}  // namespace pfl

#endif
