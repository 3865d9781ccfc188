// Brute-force reference implementations used to pin expected values.
// Everything here is independent of the library's algorithmic paths:
// plain permutation search, textbook elimination on int matrices, and
// exhaustive subset scans.
#ifndef VMTK_TESTS_ORACLES_HPP
#define VMTK_TESTS_ORACLES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "vmtk/graph.hpp"

namespace oracle {

using vmtk::Graph;

bool brute_isomorphic(const Graph& a, const Graph& b,
                      const std::vector<std::pair<int, int>>& pins = {});

std::vector<std::vector<int>> brute_orbits(const Graph& g,
                                           std::optional<int> fixed = std::nullopt);

int rank_gf2(std::vector<std::vector<int>> m);
int cutrank(const Graph& g, const std::vector<int>& x);
int layout_width(const Graph& g, const std::vector<int>& order);
int brute_lrw(const Graph& g); // min over all |V|! orderings

bool has_induced_diamond_or_hole(const Graph& g);
bool distance_hereditary_by_definition(const Graph& g);

// three-set complementation plus exchanging the adjacency rows of u, v
Graph pivot_direct(const Graph& g, int u, int v);

// true iff some vertex subset induces a graph isomorphic to h
bool has_induced_copy(const Graph& g, const Graph& h);

} // namespace oracle

#endif
