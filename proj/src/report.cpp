#include "cheeger/report.hpp"

#include <sstream>

#include "cheeger/edgelist.hpp"

namespace cheeger {

json to_json(const VertexSet& s) { return json(s.members()); }

json to_json(const Subpartition& sp) {
    json parts = json::array();
    for (const auto& p : sp.parts) parts.push_back(to_json(p));
    return json{{"k", sp.k}, {"parts", parts}};
}

json to_json(const SubBipartition& sb) {
    json pairs = json::array();
    for (const auto& [odd, even] : sb.pairs)
        pairs.push_back(json{{"odd", to_json(odd)}, {"even", to_json(even)}});
    return json{{"k", sb.k}, {"pairs", pairs}, {"residual", to_json(sb.residual)}};
}

json to_json(const CheckResult& c) {
    json j{{"name", c.name},       {"k", c.k},       {"lhs", c.lhs},
           {"rhs", c.rhs},         {"slack", c.slack}, {"tolerance", c.tolerance},
           {"pass", c.pass},       {"skipped", c.skipped}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

json to_json(const Certificate& c) {
    json pairs = json::array();
    for (const auto& p : c.pairs)
        pairs.push_back(json{{"phi_bar", p.phi_bar}, {"lhs", p.lhs}, {"pass", p.pass}});
    return json{{"k", c.k},
                {"rbar", c.rbar},
                {"bound", c.bound},
                {"pairs", pairs},
                {"attempts_used", c.attempts_used},
                {"all_pass", c.all_pass()}};
}

json to_json(const MarkovCheck& c) {
    return json{{"k", c.k},
                {"lambda_bar", c.lambda_bar},
                {"hbar", c.hbar},
                {"upper_rhs", c.upper_rhs},
                {"upper_pass", c.upper_pass},
                {"lower_bound", c.lower_bound},
                {"lower_slack", c.lower_slack}};
}

json graph_descriptor(const WeightedGraph& g) {
    double total = 0.0;
    for (const Edge& e : g.edges()) total += e.w;
    return json{{"n", g.size()},
                {"edges", g.edges().size()},
                {"total_edge_weight", total},
                {"volume", g.total_volume()},
                {"bipartite", g.is_bipartite()},
                {"connected", g.is_connected()}};
}

json spectrum_json(const EigenSystem& es) { return json(es.values); }

std::string spectrum_csv(const EigenSystem& es) {
    std::ostringstream os;
    os << "index,lambda\n";
    for (std::size_t i = 0; i < es.values.size(); ++i)
        os << (i + 1) << ',' << format_double(es.values[i]) << '\n';
    return os.str();
}

std::string dump_report(const json& doc) { return doc.dump(2) + "\n"; }

json report_skeleton(std::uint64_t seed, const Tolerances& tol, double budget) {
    return json{{"schema_version", kReportSchemaVersion},
                {"seed", seed},
                {"budget", budget},
                {"tolerances", json{{"eig", tol.eig}, {"comb", tol.comb}}}};
}

}  // namespace cheeger
