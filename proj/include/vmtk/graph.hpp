#ifndef VMTK_GRAPH_HPP
#define VMTK_GRAPH_HPP

#include <string>
#include <utility>
#include <vector>

#include "vmtk/bitset.hpp"

namespace vmtk {

using Label = std::string;

// Simple undirected graph on dense vertex indices 0..n-1 with GF(2)
// adjacency semantics: no loops, no parallel edges, symmetric adjacency.
// Every vertex carries an external label; labels are pairwise distinct
// and survive all operations that do not delete vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void toggle_edge(int u, int v);

    const Bitset& neighbors(int v) const;
    int degree(int v) const;
    std::vector<int> neighbor_list(int v) const;
    std::vector<std::pair<int, int>> edges() const; // u < v, lexicographic

    const Label& label(int v) const;
    void set_label(int v, Label s);
    int index_of_label(const Label& s) const; // -1 if absent

    // Appends an isolated vertex, returns its index.
    int add_vertex(Label s);

    // Induced subgraph on `verts`; new index i corresponds to verts[i].
    Graph induced(const std::vector<int>& verts) const;

    bool connected() const;
    std::vector<std::vector<int>> components() const;

    // Same order and adjacency matrix (labels ignored).
    bool adjacency_equal(const Graph& o) const;
    // Equal as a map label -> set of neighbor labels.
    bool same_labeled_graph(const Graph& o) const;

    bool operator==(const Graph& o) const;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<Bitset> adj_;
    std::vector<Label> labels_;
};

// --- structural predicates -------------------------------------------------

// Vertex sets of the blocks (maximal connected subgraphs without a
// cut-vertex). Every edge lies in exactly one block; isolated vertices
// form singleton blocks.
std::vector<std::vector<int>> blocks(const Graph& g);

// Every block induces a complete graph.
bool is_block_graph(const Graph& g);

// Vertices whose neighborhood induces a complete graph (degree 0 and 1
// vertices qualify).
std::vector<int> simplicial_vertices(const Graph& g);

// N(v) \ {w} == N(w) \ {v}; requires v != w.
bool is_twin(const Graph& g, int v, int w);

// --- small named constructions ---------------------------------------------

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves); // K_{1,leaves}, center = vertex 0

} // namespace vmtk

#endif
