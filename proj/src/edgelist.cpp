#include "cheeger/edgelist.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace cheeger {

WeightedGraph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    std::vector<std::pair<int, int>> seen;
    std::vector<int> ids;
    int line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        if (!(ls >> v)) throw EdgeListError(line_no, "expected at least two vertex ids");
        double w = 1.0;
        if (ls >> w) {
            std::string rest;
            if (ls >> rest) throw EdgeListError(line_no, "trailing tokens after weight");
        } else if (!ls.eof()) {
            throw EdgeListError(line_no, "malformed weight");
        }
        if (u < 0 || v < 0) throw EdgeListError(line_no, "negative vertex id");
        if (u == v) throw EdgeListError(line_no, "self-loop");
        if (!(w > 0.0) || !std::isfinite(w))
            throw EdgeListError(line_no, "weight must be strictly positive");
        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (std::find(seen.begin(), seen.end(), std::make_pair(lo, hi)) != seen.end())
            throw EdgeListError(line_no, "duplicate unordered edge");
        seen.emplace_back(lo, hi);
        edges.push_back({lo, hi, w});
        ids.push_back(lo);
        ids.push_back(hi);
    }
    if (edges.empty()) throw EdgeListError(line_no, "no edges in input");
    // External labels map to dense 0-based ids in sorted label order.
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto dense = [&](int label) {
        return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), label) - ids.begin());
    };
    for (Edge& e : edges) {
        e.u = dense(e.u);
        e.v = dense(e.v);
    }
    return WeightedGraph(static_cast<int>(ids.size()), std::move(edges));
}

WeightedGraph load_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    return read_edge_list(f);
}

std::string format_double(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

void write_edge_list(const WeightedGraph& g, std::ostream& out) {
    out << "# " << g.size() << " vertices, " << g.edges().size() << " edges\n";
    for (const Edge& e : g.edges())
        out << e.u << ' ' << e.v << ' ' << format_double(e.w) << '\n';
}

std::string edge_list_string(const WeightedGraph& g) {
    std::ostringstream os;
    write_edge_list(g, os);
    return os.str();
}

}  // namespace cheeger
