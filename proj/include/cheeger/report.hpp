#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cheeger/exact.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/markov.hpp"
#include "cheeger/projective.hpp"
#include "cheeger/spectral.hpp"
#include "cheeger/verify.hpp"

namespace cheeger {

using json = nlohmann::json;  // std::map-backed: keys serialize in sorted order

inline constexpr const char* kReportSchemaVersion = "1";

json to_json(const VertexSet& s);  // sorted vertex-id array
json to_json(const Subpartition& sp);
json to_json(const SubBipartition& sb);
json to_json(const CheckResult& c);
json to_json(const Certificate& c);
json to_json(const MarkovCheck& c);

json graph_descriptor(const WeightedGraph& g);
json spectrum_json(const EigenSystem& es);
std::string spectrum_csv(const EigenSystem& es);  // header + one line per value

// Key-ordered two-space-indented dump with a trailing newline; identical
// documents serialize byte-identically.
std::string dump_report(const json& doc);

json report_skeleton(std::uint64_t seed, const Tolerances& tol, double budget);

}  // namespace cheeger
