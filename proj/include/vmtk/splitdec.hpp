#ifndef VMTK_SPLITDEC_HPP
#define VMTK_SPLITDEC_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vmtk/delta.hpp"
#include "vmtk/graph.hpp"
#include "vmtk/report.hpp"

namespace vmtk {

// Split decomposition graph: the underlying graph plus a matching of
// marked edges. Marker vertices are exactly the endpoints of marked
// edges; the unmarked (original) vertices carry the vertices of the
// decomposed graph. Bags are the components after removing the marked
// edges.
struct MarkedGraph {
    Graph graph;
    std::vector<bool> is_marker;                  // per vertex
    std::vector<std::pair<int, int>> marked_edges; // u < v, sorted

    bool edge_marked(int u, int v) const;
    int marked_partner(int v) const; // -1 for originals
    std::vector<std::vector<int>> bags() const;  // sorted vertex lists
    int bag_of(int v) const;                      // index into bags()
    std::vector<int> original_vertices() const;

    // structural invariants: matching of marker-marker edges, markers
    // exactly the marked endpoints, bag adjacency acyclic and connected
    void validate() const;
};

struct Split {
    std::vector<int> a_side;
    std::vector<int> b_side;
};

// Deterministic split search: the lexicographically least A containing
// vertex 0 (sets compared as sorted index lists). Returns nothing iff
// g is prime. Requires g connected; exhaustive scan domain |V| <= 24.
std::optional<Split> find_split(const Graph& g);

// Uniform choice among all splits, for uniqueness experiments.
std::optional<Split> find_split_seeded(const Graph& g, std::mt19937_64& rng);

bool is_valid_split(const Graph& g, const Split& s);

// The two-bag decomposition realizing a split: G[A]+a and G[B]+b joined
// by the marked edge ab.
MarkedGraph simple_decomposition(const Graph& g, const Split& s);

MarkedGraph trivial_decomposition(const Graph& g);

// Pivot the marked edge and delete both endpoints; remaining marks kept.
MarkedGraph recompose(const MarkedGraph& d, std::pair<int, int> marked_edge);

// Recomposing every marked edge; recovers the decomposed graph with its
// original labels.
Graph recompose_all(const MarkedGraph& d);

// Fully decompose with any splits, then merge adjacent complete bags and
// center-to-leaf star violations to a fixpoint. Unique by Cunningham's
// theorem; `seed` variants randomize split and merge order.
MarkedGraph canonical_decomposition(const Graph& g);
MarkedGraph canonical_decomposition_seeded(const Graph& g, uint64_t seed);

// Alternating path relations (odd paths realize edges, even paths
// propagate a vertex into other bags).
bool linked(const MarkedGraph& d, int x, int y);
std::vector<int> representatives_of(const MarkedGraph& d, int v);

// D*v: local complementation applied inside each bag at its
// representative of v.
MarkedGraph local_complement_decomposition(const MarkedGraph& d, int v);

// Isomorphism preserving the marked edge set and the marker/original
// partition.
bool marked_isomorphic(const MarkedGraph& d1, const MarkedGraph& d2);

enum class BagKind { Prime, Star, Complete };

struct BagInfo {
    std::vector<int> vertices;
    BagKind kind;
    int center = -1; // star bags only
};

std::vector<BagInfo> classify_bags(const MarkedGraph& d);

// Connected distance-hereditary iff all canonical bags are star or
// complete.
bool is_distance_hereditary(const Graph& g);

// Block-graph characterization against graph-side predicates, plus the
// simplicial-vertex criterion when g is a block graph.
Report check_block_characterizations(const Graph& g);

// The explicit decomposition of a certified member (level >= 1): a star
// bag per non-leaf vertex and a triangle bag per triangle, wired by the
// level-0 matching. Marked-graph isomorphic to the computed canonical
// decomposition.
MarkedGraph build_appendix_decomposition(const Graph& g, const DeltaCertificate& cert);

// Canonical code of the bag tree labeled by (bag size, unmarked count).
// Equal codes are necessary for local equivalence.
std::string local_equivalence_invariant(const Graph& g);

// Text format: header "n_total n_original"; "v <idx> <label|->" lines
// (markers as "-"); "e <u> <v> <M|U>" lines. Byte-exact round trip.
std::string write_marked(const MarkedGraph& d);
MarkedGraph read_marked(std::istream& in);

std::string marked_to_dot(const MarkedGraph& d);

} // namespace vmtk

#endif
