#include "vmtk/rank.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_set>

#include "vmtk/errors.hpp"

namespace vmtk {

int gf2_rank(const CutMatrix& m) {
    std::vector<Bitset> basis; // kept with distinct leading bits
    std::vector<int> leads;
    int rank = 0;
    for (Bitset row : m.rows) {
        for (size_t i = 0; i < basis.size(); ++i)
            if (row.test(leads[i])) row ^= basis[i];
        int lead = row.first();
        if (lead >= 0) {
            basis.push_back(std::move(row));
            leads.push_back(lead);
            ++rank;
        }
    }
    return rank;
}

int cutrank(const Graph& g, const Bitset& x) {
    if (x.size() != g.order()) throw DomainError("cutrank: set size mismatch");
    CutMatrix m;
    x.for_each([&](int v) {
        Bitset row = g.neighbors(v);
        row.and_not(x);
        m.rows.push_back(std::move(row));
    });
    return gf2_rank(m);
}

int cutrank(const Graph& g, const std::vector<int>& x) {
    Bitset b(g.order());
    for (int v : x) {
        if (v < 0 || v >= g.order()) throw DomainError("cutrank: vertex outside V");
        b.set(v);
    }
    return cutrank(g, b);
}

int layout_width(const Graph& g, const Layout& l) {
    int n = g.order();
    if (int(l.order.size()) != n) throw DomainError("layout is not a permutation of V");
    std::vector<bool> seen(n, false);
    for (int v : l.order) {
        if (v < 0 || v >= n || seen[v]) throw DomainError("layout is not a permutation of V");
        seen[v] = true;
    }
    if (n <= 1) return 0;
    int width = 0;
    Bitset prefix(n);
    for (int v : l.order) {
        prefix.set(v);
        width = std::max(width, cutrank(g, prefix));
    }
    return width;
}

namespace {

// rank of the S-versus-complement submatrix with rows packed in a
// machine word; hot path of the DP (n <= 20)
int cutrank_mask(const std::vector<uint32_t>& adj, uint32_t s) {
    uint32_t basis[32];
    int rank = 0;
    uint32_t rest = s;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        uint32_t row = adj[v] & ~s;
        for (int i = 0; i < rank; ++i)
            row = std::min(row, row ^ basis[i]);
        if (row) basis[rank++] = row;
    }
    return rank;
}

} // namespace

LrwResult linear_rankwidth_exact(const Graph& g) {
    int n = g.order();
    if (n > 20) throw DomainError("linear_rankwidth_exact supports order <= 20");
    LrwResult res;
    if (n == 0) return res;

    std::vector<uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        g.neighbors(v).for_each([&](int w) { adj[v] |= uint32_t{1} << w; });

    const uint32_t full = (n == 32) ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
    std::vector<uint8_t> f(size_t(full) + 1, 0);
    std::vector<int8_t> pred(size_t(full) + 1, -1);

    for (uint32_t s = 1; s <= full; ++s) {
        int cr = cutrank_mask(adj, s);
        int best = 127, bestv = -1;
        uint32_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int cand = std::max(int(f[s & ~(uint32_t{1} << v)]), cr);
            if (cand < best) {
                best = cand;
                bestv = v;
            }
        }
        f[s] = uint8_t(best);
        pred[s] = int8_t(bestv);
    }

    res.width = f[full];
    std::vector<int> rev;
    for (uint32_t s = full; s;) {
        int v = pred[s];
        rev.push_back(v);
        s &= ~(uint32_t{1} << v);
    }
    res.layout.order.assign(rev.rbegin(), rev.rend());
    return res;
}

DecideResult lrw_at_most(const Graph& g, int t, uint64_t node_budget) {
    int n = g.order();
    if (n > 64) throw DomainError("lrw_at_most supports order <= 64");
    DecideResult res;
    if (t < 0) {
        res.verdict = Decision::False;
        return res;
    }
    if (n <= 1) {
        res.verdict = Decision::True;
        res.witness = Layout{};
        if (n == 1) res.witness->order = {0};
        return res;
    }

    auto cutrank_of = [&](uint64_t s) {
        Bitset sb(n);
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1) sb.set(v);
        return cutrank(g, sb);
    };

    std::unordered_set<uint64_t> dead;
    std::vector<int> order;
    uint64_t nodes = 0;
    const uint64_t full = (n == 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    bool exhausted = false;

    std::function<bool(uint64_t)> extend = [&](uint64_t s) -> bool {
        if (s == full) return true;
        if (dead.count(s)) return false;
        if (++nodes > node_budget) {
            exhausted = true;
            return false;
        }
        // cheapest extensions first
        std::vector<std::pair<int, int>> cands;
        for (int v = 0; v < n; ++v) {
            if ((s >> v) & 1) continue;
            int cr = cutrank_of(s | (uint64_t{1} << v));
            if (cr <= t) cands.emplace_back(cr, v);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [cr, v] : cands) {
            order.push_back(v);
            if (extend(s | (uint64_t{1} << v))) return true;
            order.pop_back();
            if (exhausted) return false;
        }
        dead.insert(s);
        return false;
    };

    bool ok = extend(0);
    res.nodes = nodes;
    if (ok) {
        res.verdict = Decision::True;
        res.witness = Layout{order};
    } else if (exhausted) {
        res.verdict = Decision::Exhausted;
    } else {
        res.verdict = Decision::False;
    }
    return res;
}

bool check_submodularity(const Graph& g, const Bitset& x, const Bitset& y) {
    Bitset inter = x;
    inter &= y;
    Bitset uni = x;
    uni |= y;
    return cutrank(g, x) + cutrank(g, y) >= cutrank(g, inter) + cutrank(g, uni);
}

} // namespace vmtk
