#include "vmtk/splitdec.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "vmtk/errors.hpp"
#include "vmtk/vm.hpp"

namespace vmtk {

bool MarkedGraph::edge_marked(int u, int v) const {
    auto e = std::minmax(u, v);
    return std::binary_search(marked_edges.begin(), marked_edges.end(),
                              std::pair<int, int>(e.first, e.second));
}

int MarkedGraph::marked_partner(int v) const {
    for (auto [a, b] : marked_edges) {
        if (a == v) return b;
        if (b == v) return a;
    }
    return -1;
}

std::vector<std::vector<int>> MarkedGraph::bags() const {
    // components after removing marked edges
    Graph h = graph;
    for (auto [u, v] : marked_edges) h.remove_edge(u, v);
    return h.components();
}

int MarkedGraph::bag_of(int v) const {
    auto bs = bags();
    for (size_t i = 0; i < bs.size(); ++i)
        if (std::binary_search(bs[i].begin(), bs[i].end(), v)) return int(i);
    return -1;
}

std::vector<int> MarkedGraph::original_vertices() const {
    std::vector<int> out;
    for (int v = 0; v < graph.order(); ++v)
        if (!is_marker[v]) out.push_back(v);
    return out;
}

void MarkedGraph::validate() const {
    if (int(is_marker.size()) != graph.order()) throw DomainError("marker flags out of sync");
    std::vector<int> incid(graph.order(), 0);
    for (auto [u, v] : marked_edges) {
        if (!graph.has_edge(u, v)) throw DomainError("marked edge is not an edge");
        if (!is_marker[u] || !is_marker[v]) throw DomainError("marked edge endpoint is original");
        incid[u]++;
        incid[v]++;
    }
    for (int v = 0; v < graph.order(); ++v) {
        if (is_marker[v] && incid[v] != 1) throw DomainError("marker without unique marked edge");
        if (!is_marker[v] && incid[v] != 0) throw DomainError("original vertex on a marked edge");
    }
    auto bs = bags();
    if (!marked_edges.empty()) {
        // bag adjacency must form a tree
        if (bs.size() != marked_edges.size() + 1)
            throw DomainError("bag structure is not a tree");
        for (auto [u, v] : marked_edges) {
            int bu = -1, bv = -1;
            for (size_t i = 0; i < bs.size(); ++i) {
                if (std::binary_search(bs[i].begin(), bs[i].end(), u)) bu = int(i);
                if (std::binary_search(bs[i].begin(), bs[i].end(), v)) bv = int(i);
            }
            if (bu == bv) throw DomainError("marked edge inside a bag");
        }
    }
}

// --- splits -------------------------------------------------------------------

namespace {

// cutrank(A) <= 1: the nonzero rows of the A-versus-rest submatrix agree
bool boundary_rank_le_1(const Graph& g, const Bitset& amask) {
    Bitset pattern(g.order());
    bool have = false, ok = true;
    amask.for_each([&](int v) {
        if (!ok) return;
        Bitset row = g.neighbors(v);
        row.and_not(amask);
        if (row.none()) return;
        if (!have) {
            pattern = row;
            have = true;
        } else if (!(row == pattern)) {
            ok = false;
        }
    });
    return ok;
}

Split split_from_mask(const Graph& g, const Bitset& amask) {
    Split s;
    for (int v = 0; v < g.order(); ++v)
        (amask.test(v) ? s.a_side : s.b_side).push_back(v);
    return s;
}

} // namespace

bool is_valid_split(const Graph& g, const Split& s) {
    int n = g.order();
    if (int(s.a_side.size() + s.b_side.size()) != n) return false;
    if (s.a_side.size() < 2 || s.b_side.size() < 2) return false;
    Bitset amask(n);
    std::vector<bool> seen(n, false);
    for (int v : s.a_side) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
        amask.set(v);
    }
    for (int v : s.b_side) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return boundary_rank_le_1(g, amask);
}

std::optional<Split> find_split(const Graph& g) {
    if (!g.connected()) throw DomainError("find_split: disconnected input");
    int n = g.order();
    if (n < 4) return std::nullopt;
    if (n > 24) throw DomainError("find_split: exhaustive scan domain is |V| <= 24");

    Bitset amask(n);
    amask.set(0);
    int size = 1;
    std::optional<Split> out;
    // preorder over subsets containing 0, lexicographic on sorted lists
    std::function<bool(int)> rec = [&](int last) -> bool {
        if (size >= 2 && size <= n - 2 && boundary_rank_le_1(g, amask)) {
            out = split_from_mask(g, amask);
            return true;
        }
        if (size > n - 3) return false;
        for (int v = last + 1; v < n; ++v) {
            amask.set(v);
            ++size;
            if (rec(v)) return true;
            --size;
            amask.reset(v);
        }
        return false;
    };
    rec(0);
    return out;
}

std::optional<Split> find_split_seeded(const Graph& g, std::mt19937_64& rng) {
    if (!g.connected()) throw DomainError("find_split_seeded: disconnected input");
    int n = g.order();
    if (n < 4) return std::nullopt;
    if (n > 20) throw DomainError("find_split_seeded: scan domain is |V| <= 20");
    std::vector<uint32_t> valid;
    for (uint32_t mask = 1; mask < (uint32_t{1} << (n - 1)); ++mask) {
        uint32_t a = (mask << 1) | 1; // vertex 0 stays on the A side
        int size = std::popcount(a);
        if (size < 2 || size > n - 2) continue;
        Bitset amask(n);
        for (int v = 0; v < n; ++v)
            if ((a >> v) & 1) amask.set(v);
        if (boundary_rank_le_1(g, amask)) valid.push_back(a);
    }
    if (valid.empty()) return std::nullopt;
    std::uniform_int_distribution<size_t> pick(0, valid.size() - 1);
    uint32_t a = valid[pick(rng)];
    Bitset amask(n);
    for (int v = 0; v < n; ++v)
        if ((a >> v) & 1) amask.set(v);
    return split_from_mask(g, amask);
}

// --- decomposition operations ---------------------------------------------------

namespace {

Label fresh_marker_label(const Graph& g, int hint) {
    for (int k = hint;; ++k) {
        Label name = "~m" + std::to_string(k);
        if (g.index_of_label(name) < 0) return name;
    }
}

} // namespace

MarkedGraph trivial_decomposition(const Graph& g) {
    MarkedGraph d;
    d.graph = g;
    d.is_marker.assign(g.order(), false);
    return d;
}

MarkedGraph simple_decomposition(const Graph& g, const Split& s) {
    if (!is_valid_split(g, s)) throw DomainError("simple_decomposition: invalid split");
    int n = g.order();
    MarkedGraph d;
    d.graph = Graph(n + 2);
    for (int v = 0; v < n; ++v) d.graph.set_label(v, g.label(v));
    int a = n, b = n + 1;
    d.graph.set_label(a, fresh_marker_label(g, 0));
    d.graph.set_label(b, fresh_marker_label(g, 1));
    Bitset amask(n);
    for (int v : s.a_side) amask.set(v);
    for (auto [u, v] : g.edges())
        if (amask.test(u) == amask.test(v)) d.graph.add_edge(u, v);
    for (int u : s.a_side) {
        Bitset row = g.neighbors(u);
        row.and_not(amask);
        if (row.any()) d.graph.add_edge(u, a);
    }
    for (int v : s.b_side) {
        Bitset row = g.neighbors(v);
        row &= amask;
        if (row.any()) d.graph.add_edge(v, b);
    }
    d.graph.add_edge(a, b);
    d.is_marker.assign(n + 2, false);
    d.is_marker[a] = d.is_marker[b] = true;
    d.marked_edges = {{a, b}};
    return d;
}

MarkedGraph recompose(const MarkedGraph& d, std::pair<int, int> marked_edge) {
    auto [x, y] = std::minmax(marked_edge.first, marked_edge.second);
    if (!d.edge_marked(x, y)) throw DomainError("recompose: edge is not marked");
    Graph p = pivot(d.graph, x, y);
    Graph ng = delete_vertex(delete_vertex(p, y), x); // y > x
    auto shift = [&](int v) { return v > y ? v - 2 : (v > x ? v - 1 : v); };
    MarkedGraph out;
    out.graph = std::move(ng);
    out.is_marker.assign(out.graph.order(), false);
    for (int v = 0; v < d.graph.order(); ++v)
        if (v != x && v != y && d.is_marker[v]) out.is_marker[shift(v)] = true;
    for (auto [u, v] : d.marked_edges)
        if (!(u == x && v == y)) out.marked_edges.emplace_back(shift(u), shift(v));
    std::sort(out.marked_edges.begin(), out.marked_edges.end());
    return out;
}

Graph recompose_all(const MarkedGraph& d) {
    MarkedGraph cur = d;
    while (!cur.marked_edges.empty()) cur = recompose(cur, cur.marked_edges.front());
    return cur.graph;
}

namespace {

// Replaces one bag with the simple decomposition given by a split of the
// bag graph (split sides as local indices into the sorted bag).
MarkedGraph split_bag(const MarkedGraph& d, const std::vector<int>& bag, const Split& s) {
    int n = d.graph.order();
    MarkedGraph out;
    out.graph = Graph(n + 2);
    for (int v = 0; v < n; ++v) out.graph.set_label(v, d.graph.label(v));
    int a = n, b = n + 1;
    out.graph.set_label(a, fresh_marker_label(d.graph, n));
    out.graph.set_label(b, fresh_marker_label(d.graph, n + 1));

    Bitset in_a(n), in_b(n);
    for (int i : s.a_side) in_a.set(bag[i]);
    for (int i : s.b_side) in_b.set(bag[i]);

    for (auto [u, v] : d.graph.edges()) {
        bool across = (in_a.test(u) && in_b.test(v)) || (in_b.test(u) && in_a.test(v));
        if (!across) out.graph.add_edge(u, v);
    }
    in_a.for_each([&](int u) {
        Bitset row = d.graph.neighbors(u);
        row &= in_b;
        if (row.any()) out.graph.add_edge(u, a);
    });
    in_b.for_each([&](int v) {
        Bitset row = d.graph.neighbors(v);
        row &= in_a;
        if (row.any()) out.graph.add_edge(v, b);
    });
    out.graph.add_edge(a, b);

    out.is_marker = d.is_marker;
    out.is_marker.push_back(true);
    out.is_marker.push_back(true);
    out.marked_edges = d.marked_edges;
    out.marked_edges.emplace_back(a, b);
    std::sort(out.marked_edges.begin(), out.marked_edges.end());
    return out;
}

bool bag_is_complete(const Graph& bg) {
    for (int u = 0; u < bg.order(); ++u)
        for (int v = u + 1; v < bg.order(); ++v)
            if (!bg.has_edge(u, v)) return false;
    return true;
}

// center of K_{1,m} with m >= 2, else -1
int bag_star_center(const Graph& bg) {
    int n = bg.order();
    if (n < 3) return -1;
    int center = -1;
    for (int v = 0; v < n; ++v)
        if (bg.degree(v) == n - 1) center = v;
    if (center < 0) return -1;
    for (int v = 0; v < n; ++v)
        if (v != center && bg.degree(v) != 1) return -1;
    return center;
}

MarkedGraph canonical_impl(const Graph& g, std::mt19937_64* rng) {
    if (!g.connected()) throw DomainError("canonical_decomposition: disconnected input");
    MarkedGraph d = trivial_decomposition(g);

    // fully decompose with whatever splits turn up
    for (bool progress = true; progress;) {
        progress = false;
        for (const auto& bag : d.bags()) {
            if (bag.size() < 4) continue;
            Graph bg = d.graph.induced(bag);
            auto s = rng ? find_split_seeded(bg, *rng) : find_split(bg);
            if (!s) continue;
            d = split_bag(d, bag, *s);
            progress = true;
            break;
        }
    }

    // recompose adjacent complete bags and center-to-leaf star contacts
    for (bool progress = true; progress;) {
        progress = false;
        auto edges = d.marked_edges;
        if (rng) std::shuffle(edges.begin(), edges.end(), *rng);
        auto bs = d.bags();
        auto bag_index = [&](int v) {
            for (size_t i = 0; i < bs.size(); ++i)
                if (std::binary_search(bs[i].begin(), bs[i].end(), v)) return int(i);
            return -1;
        };
        for (auto e : edges) {
            const auto& bag1 = bs[bag_index(e.first)];
            const auto& bag2 = bs[bag_index(e.second)];
            Graph bg1 = d.graph.induced(bag1);
            Graph bg2 = d.graph.induced(bag2);
            bool merge = false;
            if (bag_is_complete(bg1) && bag_is_complete(bg2)) {
                merge = true;
            } else {
                int c1 = bag_star_center(bg1), c2 = bag_star_center(bg2);
                if (c1 >= 0 && c2 >= 0) {
                    bool e1_center = bag1[c1] == e.first;
                    bool e2_center = bag2[c2] == e.second;
                    merge = e1_center != e2_center;
                }
            }
            if (merge) {
                d = recompose(d, e);
                progress = true;
                break;
            }
        }
    }
    d.validate();
    return d;
}

} // namespace

MarkedGraph canonical_decomposition(const Graph& g) { return canonical_impl(g, nullptr); }

MarkedGraph canonical_decomposition_seeded(const Graph& g, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return canonical_impl(g, &rng);
}

// --- alternating-path relations ---------------------------------------------------

bool linked(const MarkedGraph& d, int x, int y) {
    if (d.is_marker.at(x) || d.is_marker.at(y)) throw DomainError("linked: marker input");
    if (x == y) throw DomainError("linked: vertices must differ");
    std::vector<bool> onpath(d.graph.order(), false);
    std::function<bool(int, bool)> dfs = [&](int v, bool next_unmarked) -> bool {
        if (v == y) return true;
        onpath[v] = true;
        bool found = false;
        if (next_unmarked) {
            d.graph.neighbors(v).for_each([&](int w) {
                if (!found && !onpath[w] && !d.edge_marked(v, w)) found = dfs(w, false);
            });
        } else {
            int w = d.marked_partner(v);
            if (w >= 0 && !onpath[w]) found = dfs(w, true);
        }
        onpath[v] = false;
        return found;
    };
    return dfs(x, true);
}

std::vector<int> representatives_of(const MarkedGraph& d, int v) {
    if (d.is_marker.at(v)) throw DomainError("representatives_of: marker input");
    std::set<int> reps;
    std::vector<bool> onpath(d.graph.order(), false);
    std::function<void(int, bool)> dfs = [&](int u, bool even_here) {
        if (even_here) reps.insert(u);
        onpath[u] = true;
        if (even_here) {
            d.graph.neighbors(u).for_each([&](int w) {
                if (!onpath[w] && !d.edge_marked(u, w)) dfs(w, false);
            });
        } else {
            int w = d.marked_partner(u);
            if (w >= 0 && !onpath[w]) dfs(w, true);
        }
        onpath[u] = false;
    };
    dfs(v, true);
    return {reps.begin(), reps.end()};
}

MarkedGraph local_complement_decomposition(const MarkedGraph& d, int v) {
    if (d.is_marker.at(v)) throw DomainError("local_complement_decomposition: marker input");
    auto reps = representatives_of(d, v);
    auto bs = d.bags();
    MarkedGraph out = d;
    for (const auto& bag : bs) {
        int rep = -1;
        for (int r : reps)
            if (std::binary_search(bag.begin(), bag.end(), r)) {
                if (rep >= 0) throw std::logic_error("bag with two representatives");
                rep = r;
            }
        if (rep < 0) continue;
        std::vector<int> nb;
        out.graph.neighbors(rep).for_each([&](int w) {
            if (std::binary_search(bag.begin(), bag.end(), w)) nb.push_back(w);
        });
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) out.graph.toggle_edge(nb[i], nb[j]);
    }
    return out;
}

bool marked_isomorphic(const MarkedGraph& d1, const MarkedGraph& d2) {
    auto encode = [](const MarkedGraph& d) {
        EdgeColoredGraph c;
        c.n = d.graph.order();
        for (int v = 0; v < c.n; ++v) c.adj.push_back(d.graph.neighbors(v));
        c.special.assign(c.n, Bitset(c.n));
        for (auto [u, v] : d.marked_edges) {
            c.special[u].set(v);
            c.special[v].set(u);
        }
        c.vcolor.assign(c.n, 0);
        for (int v = 0; v < c.n; ++v)
            if (d.is_marker[v]) c.vcolor[v] = 1;
        return c;
    };
    return edge_colored_isomorphism(encode(d1), encode(d2), {}).has_value();
}

std::vector<BagInfo> classify_bags(const MarkedGraph& d) {
    std::vector<BagInfo> out;
    for (const auto& bag : d.bags()) {
        Graph bg = d.graph.induced(bag);
        BagInfo info;
        info.vertices = bag;
        if (bag_is_complete(bg)) {
            info.kind = BagKind::Complete;
        } else {
            int c = bag_star_center(bg);
            if (c >= 0) {
                info.kind = BagKind::Star;
                info.center = bag[c];
            } else if (bg.order() >= 4 && !find_split(bg)) {
                info.kind = BagKind::Prime;
            } else {
                throw DomainError("bag is neither prime nor star nor complete");
            }
        }
        out.push_back(std::move(info));
    }
    return out;
}

bool is_distance_hereditary(const Graph& g) {
    for (const auto& info : classify_bags(canonical_decomposition(g)))
        if (info.kind == BagKind::Prime) return false;
    return true;
}

Report check_block_characterizations(const Graph& g) {
    Report r;
    MarkedGraph d = canonical_decomposition(g);
    auto infos = classify_bags(d);

    bool decomposition_side = true;
    for (const auto& info : infos) {
        if (info.kind == BagKind::Prime) decomposition_side = false;
        if (info.kind == BagKind::Star && d.is_marker[info.center]) decomposition_side = false;
    }
    bool block_side = is_block_graph(g);
    r.add_bool("charblock2", block_side == decomposition_side);

    if (block_side) {
        bool graph_side = false;
        for (int v : simplicial_vertices(g))
            if (g.degree(v) >= 2) graph_side = true;
        bool bag_side = false;
        for (const auto& info : infos) {
            if (info.kind != BagKind::Complete || info.vertices.size() <= 2) continue;
            for (int v : info.vertices)
                if (!d.is_marker[v]) bag_side = true;
        }
        r.add_bool("cliquesplit", graph_side == bag_side);
    }
    return r;
}

// --- explicit decomposition of delta members -----------------------------------

MarkedGraph build_appendix_decomposition(const Graph& g, const DeltaCertificate& cert) {
    if (cert.k < 1) throw DomainError("build_appendix_decomposition requires level >= 1");
    if (!certificate_valid(g, cert))
        throw DomainError("build_appendix_decomposition: certificate mismatch");

    const int n = g.order();
    auto thick = thick_edges(g, cert);
    std::vector<int> thick_partner(n, -1);
    for (auto [u, v] : thick) {
        thick_partner[u] = v;
        thick_partner[v] = u;
    }

    std::vector<std::array<int, 3>> triangles;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, c) && g.has_edge(b, c)) triangles.push_back({a, b, c});
        }

    // vertex table: originals first, then the markers
    int total = n;
    std::map<std::pair<int, int>, int> vert_with;  // m(v, w): thick pairs, both non-leaf
    std::map<std::pair<int, int>, int> vert_tri;   // m(v, C) by (v, triangle idx)
    std::map<std::pair<int, int>, int> tri_vert;   // m(C, v)
    auto is_leaf = [&](int v) { return g.degree(v) == 1; };

    for (auto [u, v] : thick)
        if (!is_leaf(u) && !is_leaf(v)) {
            vert_with[{u, v}] = total++;
            vert_with[{v, u}] = total++;
        }
    for (size_t t = 0; t < triangles.size(); ++t)
        for (int v : triangles[t]) {
            vert_tri[{v, int(t)}] = total++;
            tri_vert[{int(t), v}] = total++;
        }

    MarkedGraph d;
    d.graph = Graph(total);
    d.is_marker.assign(total, false);
    for (int v = 0; v < n; ++v) d.graph.set_label(v, g.label(v));
    for (auto& [key, idx] : vert_with) {
        d.graph.set_label(idx, "m(" + g.label(key.first) + "," + g.label(key.second) + ")");
        d.is_marker[idx] = true;
    }
    for (auto& [key, idx] : vert_tri) {
        d.graph.set_label(idx, "m(" + g.label(key.first) + ",C" + std::to_string(key.second) + ")");
        d.is_marker[idx] = true;
    }
    for (auto& [key, idx] : tri_vert) {
        d.graph.set_label(idx, "m(C" + std::to_string(key.first) + "," + g.label(key.second) + ")");
        d.is_marker[idx] = true;
    }

    // m(v, w) of a thick edge towards a leaf w is the leaf itself
    auto marker_towards_thick = [&](int v) {
        int w = thick_partner[v];
        if (is_leaf(w)) return w;
        return vert_with.at({v, w});
    };

    // star bag per non-leaf vertex
    for (int v = 0; v < n; ++v) {
        if (is_leaf(v)) continue;
        d.graph.add_edge(v, marker_towards_thick(v));
        for (size_t t = 0; t < triangles.size(); ++t) {
            const auto& tri = triangles[t];
            if (tri[0] == v || tri[1] == v || tri[2] == v)
                d.graph.add_edge(v, vert_tri.at({v, int(t)}));
        }
    }
    // triangle bag per triangle
    for (size_t t = 0; t < triangles.size(); ++t) {
        const auto& tri = triangles[t];
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                d.graph.add_edge(tri_vert.at({int(t), tri[i]}), tri_vert.at({int(t), tri[j]}));
    }
    // marks: triangle attachments and thick edges between non-leaves
    for (size_t t = 0; t < triangles.size(); ++t)
        for (int v : triangles[t]) {
            int a = vert_tri.at({v, int(t)});
            int b = tri_vert.at({int(t), v});
            d.graph.add_edge(a, b);
            d.marked_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    for (auto [u, v] : thick)
        if (!is_leaf(u) && !is_leaf(v)) {
            int a = vert_with.at({u, v});
            int b = vert_with.at({v, u});
            d.graph.add_edge(a, b);
            d.marked_edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    std::sort(d.marked_edges.begin(), d.marked_edges.end());
    d.validate();
    return d;
}

// --- local-equivalence invariant ---------------------------------------------------

std::string local_equivalence_invariant(const Graph& g) {
    MarkedGraph d = canonical_decomposition(g);
    auto bs = d.bags();
    int nb = int(bs.size());
    std::vector<std::vector<int>> tree(nb);
    auto bag_index = [&](int v) {
        for (int i = 0; i < nb; ++i)
            if (std::binary_search(bs[i].begin(), bs[i].end(), v)) return i;
        return -1;
    };
    for (auto [u, v] : d.marked_edges) {
        int bu = bag_index(u), bv = bag_index(v);
        tree[bu].push_back(bv);
        tree[bv].push_back(bu);
    }
    std::vector<std::string> lab(nb);
    for (int i = 0; i < nb; ++i) {
        int unmarked = 0;
        for (int v : bs[i])
            if (!d.is_marker[v]) ++unmarked;
        lab[i] = std::to_string(bs[i].size()) + ":" + std::to_string(unmarked);
    }

    // tree centers by leaf peeling
    std::vector<int> deg(nb);
    for (int i = 0; i < nb; ++i) deg[i] = int(tree[i].size());
    std::vector<int> layer;
    std::vector<bool> removed(nb, false);
    int remaining = nb;
    for (int i = 0; i < nb; ++i)
        if (deg[i] <= 1) layer.push_back(i);
    while (remaining > 2) {
        std::vector<int> next;
        for (int v : layer) {
            removed[v] = true;
            --remaining;
            for (int w : tree[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::vector<int> centers;
    for (int i = 0; i < nb; ++i)
        if (!removed[i]) centers.push_back(i);

    std::function<std::string(int, int)> code = [&](int v, int parent) -> std::string {
        std::vector<std::string> childs;
        for (int w : tree[v])
            if (w != parent) childs.push_back(code(w, v));
        std::sort(childs.begin(), childs.end());
        std::string s = "(" + lab[v];
        for (const auto& c : childs) s += c;
        return s + ")";
    };
    std::string best;
    for (int c : centers) {
        std::string s = code(c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

// --- text format --------------------------------------------------------------------

std::string write_marked(const MarkedGraph& d) {
    std::ostringstream out;
    int n = d.graph.order();
    int originals = int(d.original_vertices().size());
    out << n << ' ' << originals << '\n';
    for (int v = 0; v < n; ++v)
        out << "v " << v << ' ' << (d.is_marker[v] ? "-" : d.graph.label(v)) << '\n';
    for (auto [u, v] : d.graph.edges())
        out << "e " << u << ' ' << v << ' ' << (d.edge_marked(u, v) ? 'M' : 'U') << '\n';
    return out.str();
}

MarkedGraph read_marked(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("marked graph: missing header");
    std::istringstream hs(line);
    int n = -1, originals = -1;
    if (!(hs >> n >> originals) || n < 0 || originals < 0 || originals > n)
        throw ParseError("marked graph: bad header");
    MarkedGraph d;
    d.graph = Graph(n);
    d.is_marker.assign(n, false);
    int seen_vertices = 0;
    int marker_count = 0;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "v") {
            int idx;
            if (!(ls >> idx) || idx < 0 || idx >= n) throw ParseError("marked graph: bad vertex line");
            std::string label;
            std::getline(ls, label);
            size_t s = label.find_first_not_of(" \t");
            label = s == std::string::npos ? "" : label.substr(s);
            if (label.empty()) throw ParseError("marked graph: vertex without label field");
            if (label == "-") {
                d.is_marker[idx] = true;
                d.graph.set_label(idx, "~m" + std::to_string(marker_count++));
            } else {
                d.graph.set_label(idx, label);
            }
            ++seen_vertices;
        } else if (kind == "e") {
            int u, v;
            std::string m;
            if (!(ls >> u >> v >> m) || (m != "M" && m != "U"))
                throw ParseError("marked graph: bad edge line");
            d.graph.add_edge(u, v);
            if (m == "M") d.marked_edges.emplace_back(std::min(u, v), std::max(u, v));
        } else {
            throw ParseError("marked graph: unknown line '" + line + "'");
        }
    }
    if (seen_vertices != n) throw ParseError("marked graph: vertex lines missing");
    if (int(d.original_vertices().size()) != originals)
        throw ParseError("marked graph: original count mismatch");
    std::sort(d.marked_edges.begin(), d.marked_edges.end());
    d.validate();
    return d;
}

std::string marked_to_dot(const MarkedGraph& d) {
    std::ostringstream out;
    out << "graph decomposition {\n  node [shape=circle];\n";
    for (int v = 0; v < d.graph.order(); ++v) {
        if (d.is_marker[v])
            out << "  n" << v << " [shape=point];\n";
        else
            out << "  n" << v << " [label=\"" << d.graph.label(v) << "\"];\n";
    }
    for (auto [u, v] : d.graph.edges()) {
        out << "  n" << u << " -- n" << v;
        if (d.edge_marked(u, v)) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace vmtk
