#include "vmtk/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vmtk/errors.hpp"

namespace vmtk {

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)), labels_(n) {
    for (int i = 0; i < n; ++i) labels_[i] = std::to_string(i);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw DomainError("unknown vertex " + std::to_string(v));
}

int Graph::edge_count() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m += adj_[v].count();
    return m / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loops are not allowed");
    if (adj_[u].test(v)) throw DomainError("parallel edge");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[u].test(v)) throw DomainError("no such edge");
    adj_[u].reset(v);
    adj_[v].reset(u);
}

void Graph::toggle_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("loops are not allowed");
    adj_[u].flip(v);
    adj_[v].flip(u);
}

const Bitset& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_[v].count();
}

std::vector<int> Graph::neighbor_list(int v) const { return neighbors(v).to_vector(); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

const Label& Graph::label(int v) const {
    check_vertex(v);
    return labels_[v];
}

void Graph::set_label(int v, Label s) {
    check_vertex(v);
    labels_[v] = std::move(s);
}

int Graph::index_of_label(const Label& s) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == s) return v;
    return -1;
}

int Graph::add_vertex(Label s) {
    ++n_;
    for (auto& row : adj_) {
        Bitset wider(n_);
        row.for_each([&](int i) { wider.set(i); });
        row = wider;
    }
    adj_.emplace_back(n_);
    labels_.push_back(std::move(s));
    return n_ - 1;
}

Graph Graph::induced(const std::vector<int>& verts) const {
    Graph h(int(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i) {
        check_vertex(verts[i]);
        h.labels_[i] = labels_[verts[i]];
    }
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (adj_[verts[i]].test(verts[j])) h.add_edge(int(i), int(j));
    return h;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n_, false);
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            adj_[v].for_each([&](int w) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::adjacency_equal(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

bool Graph::same_labeled_graph(const Graph& o) const {
    if (n_ != o.n_) return false;
    std::map<Label, std::set<Label>> a, b;
    for (int v = 0; v < n_; ++v) {
        auto& sa = a[labels_[v]];
        adj_[v].for_each([&](int w) { sa.insert(labels_[w]); });
        auto& sb = b[o.labels_[v]];
        o.adj_[v].for_each([&](int w) { sb.insert(o.labels_[w]); });
    }
    return a == b;
}

bool Graph::operator==(const Graph& o) const {
    return adjacency_equal(o) && labels_ == o.labels_;
}

// --- predicates --------------------------------------------------------------

namespace {

struct BlockFinder {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> out;
    int timer = 0;

    explicit BlockFinder(const Graph& gg)
        : g(gg), disc(gg.order(), -1), low(gg.order(), -1) {}

    void emit_from(std::pair<int, int> top_edge) {
        std::set<int> verts;
        while (true) {
            auto e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == top_edge) break;
        }
        out.emplace_back(verts.begin(), verts.end());
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = timer++;
        g.neighbors(u).for_each([&](int v) {
            if (v == parent) return;
            if (disc[v] == -1) {
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) emit_from({u, v});
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        });
    }
};

} // namespace

std::vector<std::vector<int>> blocks(const Graph& g) {
    BlockFinder bf(g);
    for (int v = 0; v < g.order(); ++v) {
        if (bf.disc[v] != -1) continue;
        bf.dfs(v, -1);
        if (g.degree(v) == 0) bf.out.push_back({v});
    }
    std::sort(bf.out.begin(), bf.out.end());
    return bf.out;
}

bool is_block_graph(const Graph& g) {
    for (const auto& b : blocks(g)) {
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                if (!g.has_edge(b[i], b[j])) return false;
    }
    return true;
}

std::vector<int> simplicial_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v) {
        auto nb = g.neighbor_list(v);
        bool clique = true;
        for (size_t i = 0; i < nb.size() && clique; ++i)
            for (size_t j = i + 1; j < nb.size() && clique; ++j)
                if (!g.has_edge(nb[i], nb[j])) clique = false;
        if (clique) out.push_back(v);
    }
    return out;
}

bool is_twin(const Graph& g, int v, int w) {
    if (v == w) throw DomainError("is_twin requires distinct vertices");
    Bitset nv = g.neighbors(v);
    Bitset nw = g.neighbors(w);
    nv.reset(w);
    nw.reset(v);
    return nv == nw;
}

// --- constructions -----------------------------------------------------------

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

} // namespace vmtk
