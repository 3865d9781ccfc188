#ifndef VMTK_ISO_HPP
#define VMTK_ISO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vmtk/graph.hpp"

namespace vmtk {

struct RootedGraph {
    Graph graph;
    int root = 0;
};

struct OrbitPartition {
    std::vector<std::vector<int>> classes; // sorted vertex lists, sorted by first element
    int count() const { return int(classes.size()); }
    int class_of(int v) const;
};

// Graph with vertex colors and an optional second edge relation
// (special is a subset of adj). The isomorphism core works on this
// shape so that marked decomposition graphs reuse it.
struct EdgeColoredGraph {
    int n = 0;
    std::vector<Bitset> adj;
    std::vector<Bitset> special;
    std::vector<int> vcolor;

    static EdgeColoredGraph from_graph(const Graph& g);
};

// Isomorphism respecting vertex colors, edge kinds, and the given
// required vertex mappings. Degree/neighborhood partition refinement
// with backtracking; returns a full mapping when one exists.
std::optional<std::vector<int>> edge_colored_isomorphism(
    const EdgeColoredGraph& a, const EdgeColoredGraph& b,
    std::span<const std::pair<int, int>> pins);

bool isomorphic(const Graph& g1, const Graph& g2);
bool rooted_isomorphic(const RootedGraph& r1, const RootedGraph& r2);
bool isomorphic_pinned(const Graph& g1, const Graph& g2,
                       std::span<const std::pair<int, int>> pins);

// Orbits of Aut(g), or of Aut(g, fixed) when a fixed vertex is given.
// Computed as the transitive closure of pairwise rooted isomorphism.
OrbitPartition automorphism_orbits(const Graph& g, std::optional<int> fixed = std::nullopt);

// Minimum adjacency bit-string over all vertex orderings, pruned by
// prefix comparison. Only supported for order <= 10. First word holds
// the order, the rest pack the upper-triangle bits in column order.
using CanonForm = std::vector<uint64_t>;
CanonForm canonical_form(const Graph& g);

// Rebuilds a representative graph from a canonical form.
Graph graph_of_canon(const CanonForm& c);

} // namespace vmtk

#endif
