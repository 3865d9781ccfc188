#ifndef VMTK_DELTA_HPP
#define VMTK_DELTA_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "vmtk/graph.hpp"
#include "vmtk/iso.hpp"
#include "vmtk/rank.hpp"
#include "vmtk/report.hpp"

namespace vmtk {

// Recursive membership witness for the delta family. Level 0 certifies
// K2 and carries no triangle. For level k >= 1, removing the three
// triangle edges leaves exactly three components of 2*3^(k-1) vertices,
// part i containing triangle[i]. parts[i] is ascending; children[i]
// uses indices relative to g.induced(parts[i]).
struct DeltaCertificate {
    int k = 0;
    std::array<int, 3> triangle{-1, -1, -1};
    std::array<std::vector<int>, 3> parts;
    std::vector<DeltaCertificate> children;
};

enum class DeltaType { A, B, C };

struct DeltaTypeInfo {
    DeltaType tag;
    int symmetry_order; // 6, 2, or 1
};

struct CountTable {
    int k = 0;
    std::optional<uint64_t> p; // rooted class count, when computable (k <= 3)
    uint64_t a = 0, b = 0, c = 0;
    uint64_t total = 0;
    // class count obtained by actually constructing the members;
    // filled for k <= 3
    std::optional<uint64_t> constructed;
};

// Disjoint union of the three graphs plus a triangle on their roots.
// Vertices of part i are relabeled with prefix "<i>." and keep their
// relative order, so the construction is replayable from labels.
Graph delta_compose(const RootedGraph& g1, const RootedGraph& g2, const RootedGraph& g3);

// One representative per isomorphism class; 1, 1, 4 classes for
// k = 0, 1, 2. Throws for k >= 3 (use count_delta there).
std::vector<Graph> enumerate_delta(int k);

// One representative per rooted isomorphism class; lengths 1, 2, 24.
std::vector<RootedGraph> enumerate_rooted_delta(int k);

// Class counts. a = p_{k-1}, b = p_{k-1}(p_{k-1}-1), c = C(p_{k-1},3).
// p is filled through k = 3 (k <= 2 by rooted enumeration, k = 3 by
// summing orbit counts over the constructed classes); k = 4 reports the
// formula counts from p_3. Throws for k > 4.
CountTable count_delta(int k);

// Membership test with certificate. For k >= 1 asserts that exactly one
// triangle splits the graph correctly.
std::optional<DeltaCertificate> recognize_delta(const Graph& g);

// Checks a certificate against a graph (sizes, triangle, components,
// recursion). Used as a precondition guard by the layout builders.
bool certificate_valid(const Graph& g, const DeltaCertificate& cert);

// Pairwise rooted-isomorphism pattern of the three parts. k >= 1.
DeltaTypeInfo classify_type(const Graph& g, const DeltaCertificate& cert);

// Orbit inequalities and the automorphism-factorization equalities for
// one member; orbit computation scale |V| <= 18.
Report orbit_lower_bound_check(const Graph& g, const DeltaCertificate& cert);

// The edges inherited from the level-0 pairs; always a perfect matching.
std::vector<std::pair<int, int>> thick_edges(const Graph& g, const DeltaCertificate& cert);

// Width-(k+1) layout of g starting at v and ending at its twin w, given
// that g minus w is certified at level k.
Layout build_twin_layout(const Graph& g, const DeltaCertificate& cert_minus_w, int v, int w);

// Width-(k+1) layout of a certified member starting at `start`.
Layout build_delta_layout(const Graph& g, const DeltaCertificate& cert, int start);

// lrw(g) == k+1 exactly and every elementary representative has lrw
// exactly k. Exact DP domain: |V| <= 20, i.e. k <= 2.
Report verify_excluded(const Graph& g, int k);

// Bridge-join and two-member delta compositions land at exact width k;
// third parts range over all graphs of width <= k-1 with at most 6
// vertices. k in {1, 2}.
Report verify_composition_lemmas(int k);

} // namespace vmtk

#endif
