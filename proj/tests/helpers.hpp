#ifndef VMTK_TESTS_HELPERS_HPP
#define VMTK_TESTS_HELPERS_HPP

#include "vmtk/graph.hpp"

namespace testutil {

// triangle 0-1-2 with pendant leaves 3~0, 4~1, 5~2
inline vmtk::Graph net_graph() {
    return vmtk::Graph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
}

// K4 minus one edge; 0,1 are the degree-3 pair
inline vmtk::Graph diamond_graph() {
    return vmtk::Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// 4-cycle 0-1-2-3 with pendants 4~1 and 5~3 (opposite cycle vertices)
inline vmtk::Graph h_obstruction() {
    return vmtk::Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {3, 5}});
}

} // namespace testutil

#endif
