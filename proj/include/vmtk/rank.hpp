#ifndef VMTK_RANK_HPP
#define VMTK_RANK_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "vmtk/graph.hpp"

namespace vmtk {

// Rows of the X-versus-complement adjacency submatrix, bit-packed.
struct CutMatrix {
    std::vector<Bitset> rows;
};

// Rank over GF(2); 0 for an empty matrix.
int gf2_rank(const CutMatrix& m);

// cutrk_G(X) = rank of A(G)[X, V \ X] over GF(2).
int cutrank(const Graph& g, const Bitset& x);
int cutrank(const Graph& g, const std::vector<int>& x);

// A total ordering of V(G).
struct Layout {
    std::vector<int> order;
};

// Maximum prefix cut-rank; 0 when |V| <= 1. Throws unless `l` is a
// permutation of V(g).
int layout_width(const Graph& g, const Layout& l);

struct LrwResult {
    int width = 0;
    Layout layout;
};

// Exact linear rank-width by subset dynamic programming,
// f(S) = min_{v in S} max(f(S\{v}), cutrk(S)), with a witness layout
// recovered from back-pointers. Ties break to the lowest vertex index.
// Supported for order <= 20.
LrwResult linear_rankwidth_exact(const Graph& g);

enum class Decision { True, False, Exhausted };

struct DecideResult {
    Decision verdict = Decision::False;
    std::optional<Layout> witness; // present iff verdict == True
    uint64_t nodes = 0;
};

// Branch-and-bound decision "lrw(g) <= t" with memoized dead subsets.
// Exhausted (not False) is reported when the node budget runs out.
DecideResult lrw_at_most(const Graph& g, int t, uint64_t node_budget = 20'000'000);

// cutrk(X) + cutrk(Y) >= cutrk(X&Y) + cutrk(X|Y); always true, asserted
// by the property suites.
bool check_submodularity(const Graph& g, const Bitset& x, const Bitset& y);

} // namespace vmtk

#endif
