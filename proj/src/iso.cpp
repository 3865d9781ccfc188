#include "vmtk/iso.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "vmtk/errors.hpp"

namespace vmtk {

int OrbitPartition::class_of(int v) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (std::binary_search(classes[i].begin(), classes[i].end(), v)) return int(i);
    return -1;
}

EdgeColoredGraph EdgeColoredGraph::from_graph(const Graph& g) {
    EdgeColoredGraph c;
    c.n = g.order();
    c.adj.reserve(c.n);
    for (int v = 0; v < c.n; ++v) c.adj.push_back(g.neighbors(v));
    c.special.assign(c.n, Bitset(c.n));
    c.vcolor.assign(c.n, 0);
    return c;
}

namespace {

int edge_kind(const EdgeColoredGraph& g, int u, int v) {
    if (!g.adj[u].test(v)) return 0;
    return g.special[u].test(v) ? 2 : 1;
}

// Joint 1-WL style refinement. Returns false early when the color
// profiles of the two graphs separate.
bool refine_colors(const EdgeColoredGraph& a, const EdgeColoredGraph& b,
                   std::vector<int>& ca, std::vector<int>& cb) {
    auto profile_ok = [&]() {
        std::map<int, int> fa, fb;
        for (int c : ca) fa[c]++;
        for (int c : cb) fb[c]++;
        return fa == fb;
    };
    if (!profile_ok()) return false;

    for (int round = 0; round < a.n; ++round) {
        using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
        std::map<Sig, int> ids;
        auto signature = [&](const EdgeColoredGraph& g, const std::vector<int>& col, int v) {
            Sig s;
            s.first = col[v];
            g.adj[v].for_each([&](int w) {
                s.second.emplace_back(g.special[v].test(w) ? 2 : 1, col[w]);
            });
            std::sort(s.second.begin(), s.second.end());
            return s;
        };
        std::vector<int> na(a.n), nb(b.n);
        for (int v = 0; v < a.n; ++v) {
            Sig s = signature(a, ca, v);
            auto it = ids.emplace(std::move(s), int(ids.size())).first;
            na[v] = it->second;
        }
        for (int v = 0; v < b.n; ++v) {
            Sig s = signature(b, cb, v);
            auto it = ids.find(s);
            if (it == ids.end()) return false;
            nb[v] = it->second;
        }
        bool changed = (na != ca) || (nb != cb);
        int old_classes = int(std::set<int>(ca.begin(), ca.end()).size());
        ca = std::move(na);
        cb = std::move(nb);
        if (!profile_ok()) return false;
        int new_classes = int(std::set<int>(ca.begin(), ca.end()).size());
        if (!changed || new_classes == old_classes) break;
    }
    return profile_ok();
}

struct Matcher {
    const EdgeColoredGraph& a;
    const EdgeColoredGraph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<int> order;   // vertices of a in assignment order
    std::vector<int> map_ab;  // a -> b, -1 unset
    std::vector<bool> used_b;

    bool consistent(int va, int vb) const {
        if (ca[va] != cb[vb]) return false;
        for (int ua = 0; ua < a.n; ++ua) {
            int ub = map_ab[ua];
            if (ub < 0) continue;
            if (edge_kind(a, va, ua) != edge_kind(b, vb, ub)) return false;
        }
        return true;
    }

    bool search(size_t depth) {
        if (depth == order.size()) return true;
        int va = order[depth];
        for (int vb = 0; vb < b.n; ++vb) {
            if (used_b[vb] || !consistent(va, vb)) continue;
            map_ab[va] = vb;
            used_b[vb] = true;
            if (search(depth + 1)) return true;
            map_ab[va] = -1;
            used_b[vb] = false;
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> edge_colored_isomorphism(
    const EdgeColoredGraph& a, const EdgeColoredGraph& b,
    std::span<const std::pair<int, int>> pins) {
    if (a.n != b.n) return std::nullopt;
    if (a.n == 0) return std::vector<int>{};

    std::vector<int> ca = a.vcolor, cb = b.vcolor;
    // bake the pins into the initial coloring with private colors
    int base = 1 + *std::max_element(ca.begin(), ca.end());
    {
        int base_b = 1 + *std::max_element(cb.begin(), cb.end());
        base = std::max(base, base_b);
    }
    for (size_t i = 0; i < pins.size(); ++i) {
        auto [pa, pb] = pins[i];
        if (pa < 0 || pa >= a.n || pb < 0 || pb >= b.n) throw DomainError("pin out of range");
        // a vertex pinned twice must be pinned identically
        if (ca[pa] >= base || cb[pb] >= base) {
            if (ca[pa] != cb[pb]) return std::nullopt;
            continue;
        }
        ca[pa] = base + int(i);
        cb[pb] = base + int(i);
    }

    if (!refine_colors(a, b, ca, cb)) return std::nullopt;

    Matcher m{a, b, ca, cb, {}, std::vector<int>(a.n, -1), std::vector<bool>(b.n, false)};

    // most-constrained-first: small color classes early
    std::map<int, int> class_size;
    for (int c : ca) class_size[c]++;
    m.order.resize(a.n);
    std::iota(m.order.begin(), m.order.end(), 0);
    std::sort(m.order.begin(), m.order.end(), [&](int x, int y) {
        auto kx = std::tuple(class_size[ca[x]], ca[x], x);
        auto ky = std::tuple(class_size[ca[y]], ca[y], y);
        return kx < ky;
    });

    if (!m.search(0)) return std::nullopt;
    return m.map_ab;
}

bool isomorphic(const Graph& g1, const Graph& g2) {
    return isomorphic_pinned(g1, g2, {});
}

bool isomorphic_pinned(const Graph& g1, const Graph& g2,
                       std::span<const std::pair<int, int>> pins) {
    auto a = EdgeColoredGraph::from_graph(g1);
    auto b = EdgeColoredGraph::from_graph(g2);
    return edge_colored_isomorphism(a, b, pins).has_value();
}

bool rooted_isomorphic(const RootedGraph& r1, const RootedGraph& r2) {
    if (r1.root < 0 || r1.root >= r1.graph.order() || r2.root < 0 ||
        r2.root >= r2.graph.order())
        throw DomainError("root out of range");
    std::pair<int, int> pin{r1.root, r2.root};
    return isomorphic_pinned(r1.graph, r2.graph, {&pin, 1});
}

OrbitPartition automorphism_orbits(const Graph& g, std::optional<int> fixed) {
    int n = g.order();
    if (fixed && (*fixed < 0 || *fixed >= n)) throw DomainError("fixed vertex out of range");

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    // stable colors (with the fixed vertex pinned) prune candidate pairs
    auto ec = EdgeColoredGraph::from_graph(g);
    if (fixed) ec.vcolor[*fixed] = 1;
    std::vector<int> col = ec.vcolor, col2 = ec.vcolor;
    refine_colors(ec, ec, col, col2);

    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (find(x) == find(y) || col[x] != col[y]) continue;
            std::vector<std::pair<int, int>> pins;
            if (fixed) pins.emplace_back(*fixed, *fixed);
            pins.emplace_back(x, y);
            if (isomorphic_pinned(g, g, pins)) parent[find(y)] = find(x);
        }

    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < n; ++v) groups[find(v)].push_back(v);
    OrbitPartition p;
    for (auto& [root, vs] : groups) p.classes.push_back(vs);
    std::sort(p.classes.begin(), p.classes.end());
    return p;
}

// --- canonical form ----------------------------------------------------------

namespace {

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<uint8_t> best;  // complete bit string, or empty until first leaf
    std::vector<uint8_t> cur;   // growing bit string
    std::vector<int> perm;      // perm[pos] = original vertex
    std::vector<bool> used;

    explicit CanonSearch(const Graph& gg)
        : g(gg), n(gg.order()), perm(gg.order(), -1), used(gg.order(), false) {}

    void dfs(int pos, bool tight) {
        if (pos == n) {
            if (best.empty() || cur < best) best = cur;
            return;
        }
        size_t mark = cur.size();
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            for (int i = 0; i < pos; ++i)
                cur.push_back(g.has_edge(perm[i], v) ? 1 : 0);
            bool t = tight;
            bool prune = false;
            if (!best.empty() && t) {
                for (size_t k = mark; k < cur.size() && t; ++k) {
                    if (cur[k] > best[k]) { prune = true; break; }
                    if (cur[k] < best[k]) t = false;
                }
            }
            if (!prune) {
                used[v] = true;
                perm[pos] = v;
                dfs(pos + 1, t);
                perm[pos] = -1;
                used[v] = false;
            }
            cur.resize(mark);
        }
    }
};

} // namespace

CanonForm canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 10) throw DomainError("canonical_form supports order <= 10");
    CanonSearch s(g);
    s.dfs(0, true);
    CanonForm out;
    out.push_back(uint64_t(n));
    uint64_t word = 0;
    int fill = 0;
    for (uint8_t bit : s.best) {
        word = (word << 1) | bit;
        if (++fill == 64) {
            out.push_back(word);
            word = 0;
            fill = 0;
        }
    }
    if (fill > 0) out.push_back(word << (64 - fill));
    return out;
}

Graph graph_of_canon(const CanonForm& c) {
    if (c.empty()) throw DomainError("empty canonical form");
    int n = int(c[0]);
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            uint64_t word = c.at(1 + bit / 64);
            if ((word >> (63 - bit % 64)) & 1) g.add_edge(i, j);
        }
    return g;
}

} // namespace vmtk
