#include "vmtk/corpus.hpp"

#include <map>
#include <set>

#include "vmtk/errors.hpp"
#include "vmtk/iso.hpp"
#include "vmtk/vm.hpp"

namespace vmtk {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
    for (int tries = 0; tries < 10000; ++tries) {
        Graph g = random_graph(rng, n, p);
        if (g.connected()) return g;
    }
    throw ResourceError("random_connected_graph: too many rejections");
}

Graph random_tree(std::mt19937_64& rng, int n) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    // Pruefer decoding
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2);
    for (int& c : code) c = pick(rng);
    std::vector<int> deg(n, 1);
    for (int c : code) deg[c]++;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, c);
        if (--deg[c] == 1) leaves.insert(c);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    g.add_edge(a, b);
    return g;
}

Graph random_block_graph(std::mt19937_64& rng, int target_n) {
    Graph g(1);
    while (g.order() < target_n) {
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        int v = pick(rng);
        int room = target_n - g.order();
        std::uniform_int_distribution<int> size(1, std::min(3, room));
        int extra = size(rng); // clique K_{extra+1} glued at v
        std::vector<int> clique{v};
        for (int i = 0; i < extra; ++i)
            clique.push_back(g.add_vertex("b" + std::to_string(g.order())));
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                g.add_edge(clique[i], clique[j]);
    }
    return g;
}

Graph random_dh_graph(std::mt19937_64& rng, int target_n) {
    Graph g(1);
    while (g.order() < target_n) {
        std::uniform_int_distribution<int> pick(0, g.order() - 1);
        std::uniform_int_distribution<int> op(0, 2);
        int v = pick(rng);
        switch (op(rng)) {
            case 0:
                g.add_edge(g.add_vertex("p" + std::to_string(g.order())), v);
                break;
            case 1:
                g = add_twin(g, v, true);
                break;
            default:
                if (g.degree(v) == 0)
                    g.add_edge(g.add_vertex("p" + std::to_string(g.order())), v);
                else
                    g = add_twin(g, v, false);
        }
    }
    return g;
}

Graph random_nonblock_dh_graph(std::mt19937_64& rng, int target_n) {
    for (int tries = 0; tries < 10000; ++tries) {
        Graph g = random_dh_graph(rng, target_n);
        if (!is_block_graph(g)) return g;
    }
    throw ResourceError("random_nonblock_dh_graph: too many rejections");
}

std::vector<Graph> all_graph_classes(int n) {
    if (n < 1 || n > 7) throw DomainError("all_graph_classes supports 1 <= n <= 7");
    std::vector<Graph> cur{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<CanonForm, Graph> next;
        for (const Graph& g : cur) {
            for (uint32_t nb = 0; nb < (uint32_t{1} << (m - 1)); ++nb) {
                Graph h = g;
                h.add_vertex(std::to_string(m - 1));
                for (int v = 0; v < m - 1; ++v)
                    if ((nb >> v) & 1) h.add_edge(v, m - 1);
                CanonForm c = canonical_form(h);
                next.emplace(std::move(c), std::move(h));
            }
        }
        cur.clear();
        for (auto& [c, g] : next) cur.push_back(std::move(g));
    }
    return cur;
}

std::vector<Graph> all_graph_classes_up_to(int n) {
    std::vector<Graph> out;
    for (int m = 1; m <= n; ++m) {
        auto part = all_graph_classes(m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Graph> all_trees(int n) {
    if (n < 1 || n > 10) throw DomainError("all_trees supports 1 <= n <= 10");
    // every tree on m vertices is a tree on m-1 plus one leaf
    std::vector<Graph> cur{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<CanonForm, Graph> next;
        for (const Graph& t : cur)
            for (int v = 0; v < t.order(); ++v) {
                Graph h = t;
                h.add_edge(h.add_vertex(std::to_string(m - 1)), v);
                CanonForm c = canonical_form(h);
                next.emplace(std::move(c), std::move(h));
            }
        cur.clear();
        for (auto& [c, g] : next) cur.push_back(std::move(g));
    }
    return cur;
}

} // namespace vmtk
