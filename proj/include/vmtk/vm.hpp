#ifndef VMTK_VM_HPP
#define VMTK_VM_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "vmtk/graph.hpp"
#include "vmtk/iso.hpp"

namespace vmtk {

// G*v: complement adjacency inside N(v); everything else unchanged.
Graph local_complement(const Graph& g, int v);

// G^uv = G*u*v*u for an edge uv. Vertex labels stay at their slots; the
// adjacency rows of u and v end up exchanged, matching the three-set
// complementation description.
Graph pivot(const Graph& g, int u, int v);

// Induced subgraph on V \ {v}; indices above v shift down by one,
// labels are preserved.
Graph delete_vertex(const Graph& g, int v);

// The two or three elementary vertex-minor representatives at v:
// G\v, G*v\v, and (when v has a neighbor) G^vw\v for the lowest-index
// neighbor w.
std::vector<Graph> elementary_representatives(const Graph& g, int v);

// New vertex w with N(w)\{v} = N(v)\{w}; adjacent to v iff `adjacent`.
// w is appended as the last vertex with a fresh label.
Graph add_twin(const Graph& g, int v, bool adjacent);

// Steps of a vertex-minor derivation, serialized as "L v", "P u v", "D v".
struct VmStep {
    enum Kind { LocalComplement, Pivot, Delete } kind;
    int u = -1, v = -1;
};
std::vector<VmStep> parse_vm_steps(const std::string& text);
std::string format_vm_steps(const std::vector<VmStep>& steps);
Graph apply_vm_steps(Graph g, const std::vector<VmStep>& steps);

// Closure of g under local complementation, as a set of canonical
// forms of unlabeled graphs. Requires order <= 10; throws ResourceError
// past max_size states.
std::set<CanonForm> local_orbit(const Graph& g, size_t max_size = 1'000'000);

// Unlabeled local equivalence decided by orbit membership. Requires
// equal order <= 10.
bool locally_equivalent_small(const Graph& g1, const Graph& g2,
                              size_t max_size = 1'000'000);

} // namespace vmtk

#endif
