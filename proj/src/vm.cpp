#include "vmtk/vm.hpp"

#include <deque>
#include <sstream>

#include "vmtk/errors.hpp"

namespace vmtk {

Graph local_complement(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw DomainError("local_complement: unknown vertex");
    Graph h = g;
    auto nb = g.neighbor_list(v);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) h.toggle_edge(nb[i], nb[j]);
    return h;
}

Graph pivot(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw DomainError("pivot requires an edge");
    return local_complement(local_complement(local_complement(g, u), v), u);
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw DomainError("delete_vertex: unknown vertex");
    std::vector<int> keep;
    keep.reserve(g.order() - 1);
    for (int i = 0; i < g.order(); ++i)
        if (i != v) keep.push_back(i);
    return g.induced(keep);
}

std::vector<Graph> elementary_representatives(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw DomainError("elementary_representatives: unknown vertex");
    std::vector<Graph> out;
    out.push_back(delete_vertex(g, v));
    out.push_back(delete_vertex(local_complement(g, v), v));
    int w = g.neighbors(v).first();
    if (w >= 0) out.push_back(delete_vertex(pivot(g, v, w), v));
    return out;
}

Graph add_twin(const Graph& g, int v, bool adjacent) {
    if (v < 0 || v >= g.order()) throw DomainError("add_twin: unknown vertex");
    Graph h = g;
    Label base = "~t" + g.label(v);
    Label name = base;
    for (int k = 0; h.index_of_label(name) >= 0; ++k) name = base + "'" + std::to_string(k);
    int w = h.add_vertex(name);
    g.neighbors(v).for_each([&](int x) { h.add_edge(w, x); });
    if (adjacent) h.add_edge(v, w);
    return h;
}

std::vector<VmStep> parse_vm_steps(const std::string& text) {
    std::vector<VmStep> steps;
    std::string token;
    std::istringstream in(text);
    std::string norm;
    for (char c : text) norm.push_back(c == ';' || c == ',' ? ' ' : c);
    std::istringstream s(norm);
    while (s >> token) {
        VmStep st;
        if (token == "L" || token == "l") {
            st.kind = VmStep::LocalComplement;
            if (!(s >> st.v)) throw ParseError("step 'L' needs a vertex");
        } else if (token == "D" || token == "d") {
            st.kind = VmStep::Delete;
            if (!(s >> st.v)) throw ParseError("step 'D' needs a vertex");
        } else if (token == "P" || token == "p") {
            st.kind = VmStep::Pivot;
            if (!(s >> st.u >> st.v)) throw ParseError("step 'P' needs two vertices");
        } else {
            throw ParseError("unknown step token '" + token + "'");
        }
        steps.push_back(st);
    }
    return steps;
}

std::string format_vm_steps(const std::vector<VmStep>& steps) {
    std::ostringstream out;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out << ' ';
        switch (steps[i].kind) {
            case VmStep::LocalComplement: out << "L " << steps[i].v; break;
            case VmStep::Pivot: out << "P " << steps[i].u << ' ' << steps[i].v; break;
            case VmStep::Delete: out << "D " << steps[i].v; break;
        }
    }
    return out.str();
}

Graph apply_vm_steps(Graph g, const std::vector<VmStep>& steps) {
    for (const auto& st : steps) {
        switch (st.kind) {
            case VmStep::LocalComplement: g = local_complement(g, st.v); break;
            case VmStep::Pivot: g = pivot(g, st.u, st.v); break;
            case VmStep::Delete: g = delete_vertex(g, st.v); break;
        }
    }
    return g;
}

std::set<CanonForm> local_orbit(const Graph& g, size_t max_size) {
    if (g.order() > 10) throw DomainError("local_orbit supports order <= 10");
    std::set<CanonForm> seen;
    std::deque<Graph> frontier;
    seen.insert(canonical_form(g));
    frontier.push_back(g);
    while (!frontier.empty()) {
        Graph cur = std::move(frontier.front());
        frontier.pop_front();
        for (int v = 0; v < cur.order(); ++v) {
            Graph next = local_complement(cur, v);
            CanonForm c = canonical_form(next);
            if (seen.insert(std::move(c)).second) {
                if (seen.size() > max_size)
                    throw ResourceError("local orbit exceeds configured cap");
                frontier.push_back(std::move(next));
            }
        }
    }
    return seen;
}

bool locally_equivalent_small(const Graph& g1, const Graph& g2, size_t max_size) {
    if (g1.order() != g2.order())
        throw DomainError("locally_equivalent_small requires equal order");
    if (g1.order() > 10) throw DomainError("locally_equivalent_small supports order <= 10");
    auto orbit = local_orbit(g1, max_size);
    return orbit.count(canonical_form(g2)) > 0;
}

} // namespace vmtk
