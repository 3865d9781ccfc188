#include "vmtk/io.hpp"

#include <fstream>
#include <sstream>

#include "vmtk/errors.hpp"

namespace vmtk {

Graph read_edgelist(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            size_t i = line.find_first_not_of(" \t\r");
            if (i == std::string::npos || line[i] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw ParseError("edge list: missing header line");
    std::istringstream hs(header);
    long long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header '" + header + "'");

    Graph g{int(n)};
    for (long long k = 0; k < m; ++k) {
        std::string el;
        if (!next_data_line(el)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
        std::istringstream es(el);
        long long u, v;
        if (!(es >> u >> v)) throw ParseError("edge list: bad edge line '" + el + "'");
        if (!(0 <= u && u < v && v < n)) throw ParseError("edge list: edge out of range '" + el + "'");
        if (g.has_edge(int(u), int(v))) throw ParseError("edge list: duplicate edge '" + el + "'");
        g.add_edge(int(u), int(v));
    }
    return g;
}

std::string write_edgelist(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

namespace {

// bit positions follow the standard column order (0,1),(0,2),(1,2),(0,3),...
int g6_pair_index(int i, int j) { // i < j
    return j * (j - 1) / 2 + i;
}

} // namespace

Graph read_graph6(const std::string& raw) {
    std::string s = raw;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw ParseError("graph6: empty line");

    size_t pos = 0;
    auto byte = [&](size_t i) -> int {
        if (i >= s.size()) throw ParseError("graph6: truncated");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
        return c - 63;
    };

    long long n;
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else { // '~' marker
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw ParseError("graph6: order >= 2^18 unsupported");
        n = (static_cast<long long>(byte(1)) << 12) |
            (static_cast<long long>(byte(2)) << 6) | byte(3);
        pos = 4;
    }
    Graph g{int(n)};

    int nbits = int(n * (n - 1) / 2);
    int have = 0;
    int cur = 0, left = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (left == 0) {
                cur = byte(pos++);
                left = 6;
            }
            if (cur & (1 << (left - 1))) g.add_edge(i, j);
            --left;
            ++have;
        }
    (void)nbits;
    (void)have;
    if (pos != s.size()) throw ParseError("graph6: trailing characters");
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(char(63 + n));
    } else {
        out.push_back(char(126));
        out.push_back(char(63 + ((n >> 12) & 63)));
        out.push_back(char(63 + ((n >> 6) & 63)));
        out.push_back(char(63 + (n & 63)));
    }
    int nbits = n * (n - 1) / 2;
    std::vector<bool> bits(nbits, false);
    for (auto [u, v] : g.edges()) bits[g6_pair_index(u, v)] = true;
    for (int start = 0; start < nbits; start += 6) {
        int val = 0;
        for (int k = 0; k < 6; ++k) {
            val <<= 1;
            if (start + k < nbits && bits[start + k]) val |= 1;
        }
        out.push_back(char(63 + val));
    }
    return out;
}

Graph load_graph(const std::string& path, std::optional<GraphFormat> fmt) {
    GraphFormat f = fmt.value_or(path.size() >= 3 && path.substr(path.size() - 3) == ".g6"
                                     ? GraphFormat::Graph6
                                     : GraphFormat::EdgeList);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    if (f == GraphFormat::EdgeList) return read_edgelist(in);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = line;
        if (t.rfind(">>graph6<<", 0) == 0) t = t.substr(10);
        if (t.find_first_not_of(" \t\r") == std::string::npos) continue;
        return read_graph6(line);
    }
    throw ParseError("no graph6 line in '" + path + "'");
}

} // namespace vmtk
