#ifndef VMTK_CORPUS_HPP
#define VMTK_CORPUS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "vmtk/graph.hpp"

namespace vmtk {

// All randomized corpora in the project derive from a single 64-bit
// seed through this generator.
inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(seed); }

Graph random_graph(std::mt19937_64& rng, int n, double p);
Graph random_connected_graph(std::mt19937_64& rng, int n, double p);
Graph random_tree(std::mt19937_64& rng, int n);

// Connected block graph grown by gluing cliques at existing vertices.
Graph random_block_graph(std::mt19937_64& rng, int target_n);

// Connected distance-hereditary graph grown by pendant vertices and
// twins.
Graph random_dh_graph(std::mt19937_64& rng, int target_n);

// Connected distance-hereditary graph that is not a block graph.
Graph random_nonblock_dh_graph(std::mt19937_64& rng, int target_n);

// One representative per isomorphism class of graphs on exactly n
// vertices (n <= 7), built by single-vertex extensions and canonical
// deduplication. Deterministic order.
std::vector<Graph> all_graph_classes(int n);
std::vector<Graph> all_graph_classes_up_to(int n); // 1..n

// One representative per isomorphism class of trees on exactly n
// vertices (n <= 10).
std::vector<Graph> all_trees(int n);

} // namespace vmtk

#endif
