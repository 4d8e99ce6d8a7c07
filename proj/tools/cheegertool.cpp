// Command-line interface: graph generation, spectra, exact Cheeger profiles,
// certified sub-bipartition extraction, the inequality verification suite,
// and reversible Markov chain checks.
//
// Exit codes: 0 all checks pass, 1 at least one inequality violated (or the
// pipeline failed to certify), 2 input/usage error, 3 enumeration budget
// exceeded.

#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cheeger/edgelist.hpp"
#include "cheeger/errors.hpp"
#include "cheeger/exact.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/markov.hpp"
#include "cheeger/projective.hpp"
#include "cheeger/report.hpp"
#include "cheeger/spectral.hpp"
#include "cheeger/sweep.hpp"
#include "cheeger/verify.hpp"

namespace {

using namespace cheeger;

struct CommonOpts {
    std::uint64_t seed = 0;
    int kmax = -1;  // -1: min(N, 8)
    double budget = kDefaultBudget;
    double tol_eig = 1e-9;
    double tol_comb = 1e-12;
    std::string format = "json";
    std::string output;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_kmax = true) {
    cmd->add_option("--seed", o.seed, "RNG seed (default 0)");
    if (with_kmax) cmd->add_option("--kmax", o.kmax, "largest k (default min(N, 8))");
    cmd->add_option("--budget", o.budget, "enumeration budget in label vectors (default 3e8)");
    cmd->add_option("--tol-eig", o.tol_eig, "tolerance for eigenvalue-dependent checks");
    cmd->add_option("--tol-comb", o.tol_comb, "tolerance for combinatorial checks");
    cmd->add_option("--format", o.format, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("-o,--output", o.output, "write to file instead of stdout");
}

void emit(const CommonOpts& o, const std::string& payload) {
    if (o.output.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw std::runtime_error("cannot write '" + o.output + "'");
    f << payload;
}

int resolved_kmax(const CommonOpts& o, int n) {
    if (o.kmax > 0) return std::min(o.kmax, n);
    return std::min(n, 8);
}

void reject_csv(const CommonOpts& o) {
    if (o.format == "csv")
        throw std::domain_error("csv format is only available for the spectrum command");
}

Tolerances tolerances(const CommonOpts& o) { return Tolerances{o.tol_eig, o.tol_comb}; }

// --- gen ---------------------------------------------------------------

int cmd_gen(const std::string& kind, const std::vector<double>& params, const CommonOpts& o) {
    const auto g = generate(kind, params, o.seed);
    emit(o, edge_list_string(g));
    return 0;
}

// --- spectrum ----------------------------------------------------------

int cmd_spectrum(const std::string& path, const CommonOpts& o) {
    const auto g = load_edge_list(path);
    const auto es = eigensystem(g);
    if (o.format == "csv") {
        emit(o, spectrum_csv(es));
    } else if (o.format == "text") {
        std::string out;
        for (std::size_t i = 0; i < es.values.size(); ++i)
            out += "lambda_" + std::to_string(i + 1) + " = " + format_double(es.values[i]) + "\n";
        emit(o, out);
    } else {
        json doc = report_skeleton(o.seed, tolerances(o), o.budget);
        doc["graph"] = graph_descriptor(g);
        doc["spectrum"] = spectrum_json(es);
        emit(o, dump_report(doc));
    }
    return 0;
}

// --- cheeger / dual-cheeger ---------------------------------------------

int cmd_cheeger(const std::string& path, const CommonOpts& o, bool dual) {
    reject_csv(o);
    const auto g = load_edge_list(path);
    const int kmax = resolved_kmax(o, g.size());
    json profiles = json::object();
    std::string text;
    for (int k = 1; k <= kmax; ++k) {
        json entry;
        if (dual) {
            const auto hb = hbar_exact(g, k, o.budget);
            const auto hs = hbar_star_exact(g, k, o.budget);
            entry["hbar"] = hb.value;
            entry["hbar_witness"] = to_json(hb.witness);
            entry["hbar_star"] = hs.value;
            entry["hbar_star_witness"] = to_json(hs.witness);
            text += "hbar(" + std::to_string(k) + ") = " + format_double(hb.value) +
                    "  hbar*(" + std::to_string(k) + ") = " + format_double(hs.value) + "\n";
        } else {
            const auto h = h_exact(g, k, o.budget);
            entry["h"] = h.value;
            entry["h_witness"] = to_json(h.witness);
            text += "h(" + std::to_string(k) + ") = " + format_double(h.value) + "\n";
        }
        profiles[std::to_string(k)] = entry;
    }
    if (o.format == "text") {
        emit(o, text);
    } else {
        json doc = report_skeleton(o.seed, tolerances(o), o.budget);
        doc["graph"] = graph_descriptor(g);
        doc["profiles"] = profiles;
        emit(o, dump_report(doc));
    }
    return 0;
}

// --- cluster --------------------------------------------------------------

int cmd_cluster(const std::string& path, int k, int attempts, const CommonOpts& o) {
    reject_csv(o);
    const auto g = load_edge_list(path);
    if (k < 1 || k > g.size()) throw std::domain_error("cluster: k out of range");
    const auto res = extract_sub_bipartition(g, k, o.seed, attempts);
    if (o.format == "text") {
        std::string text = "k = " + std::to_string(k) + "\n";
        for (int i = 0; i < res.partition.k; ++i) {
            text += "pair " + std::to_string(i + 1) + ": odd = [";
            for (int v : res.partition.pairs[i].first.members()) text += " " + std::to_string(v);
            text += " ]  even = [";
            for (int v : res.partition.pairs[i].second.members()) text += " " + std::to_string(v);
            text += " ]  phi_bar = " + format_double(res.certificate.pairs[i].phi_bar) + "\n";
        }
        text += std::string("certificate: ") + (res.certificate.all_pass() ? "pass" : "FAIL") +
                " (bound " + format_double(res.certificate.bound) + ")\n";
        emit(o, text);
    } else {
        json doc = report_skeleton(o.seed, tolerances(o), o.budget);
        doc["graph"] = graph_descriptor(g);
        doc["partition"] = to_json(res.partition);
        doc["certificate"] = to_json(res.certificate);
        emit(o, dump_report(doc));
    }
    return res.certificate.all_pass() ? 0 : 1;
}

// --- verify -----------------------------------------------------------------

json verify_one(const WeightedGraph& g, const CommonOpts& o, bool with_certificates) {
    const int kmax = resolved_kmax(o, g.size());
    json doc;
    doc["graph"] = graph_descriptor(g);
    doc["spectrum"] = spectrum_json(eigensystem(g));

    json profiles = json::object();
    for (int k = 1; k <= kmax; ++k) {
        json entry;
        try {
            const auto h = h_exact(g, k, o.budget);
            entry["h"] = h.value;
            entry["h_witness"] = to_json(h.witness);
        } catch (const BudgetError& e) {
            entry["h_skipped"] = e.what();
        }
        try {
            const auto hb = hbar_exact(g, k, o.budget);
            const auto hs = hbar_star_exact(g, k, o.budget);
            entry["hbar"] = hb.value;
            entry["hbar_witness"] = to_json(hb.witness);
            entry["hbar_star"] = hs.value;
            entry["hbar_star_witness"] = to_json(hs.witness);
        } catch (const BudgetError& e) {
            entry["hbar_skipped"] = e.what();
        }
        profiles[std::to_string(k)] = entry;
    }
    doc["profiles"] = profiles;

    const auto checks = run_suite(g, kmax, o.budget, tolerances(o));
    json jchecks = json::array();
    for (const auto& c : checks) jchecks.push_back(to_json(c));
    doc["checks"] = jchecks;
    doc["all_pass"] = all_pass(checks);
    doc["any_skipped"] = any_skipped(checks);

    if (with_certificates) {
        json certs = json::array();
        bool cert_ok = true;
        for (int k = 1; k <= std::min(kmax, g.size() / 2); ++k) {
            try {
                const auto res = extract_sub_bipartition(g, k, o.seed);
                certs.push_back(to_json(res.certificate));
                cert_ok &= res.certificate.all_pass();
            } catch (const PipelineError& e) {
                certs.push_back(json{{"k", k}, {"error", e.what()}});
                cert_ok = false;
            }
        }
        doc["certificates"] = certs;
        doc["certificates_pass"] = cert_ok;
    }
    return doc;
}

int verify_exit_code(const json& doc) {
    bool violated = !doc["all_pass"].get<bool>();
    if (doc.contains("certificates_pass") && !doc["certificates_pass"].get<bool>())
        violated = true;
    if (violated) return 1;
    if (doc["any_skipped"].get<bool>()) return 3;
    return 0;
}

int cmd_verify(const std::optional<std::string>& path, bool corpus, const CommonOpts& o) {
    reject_csv(o);
    json doc = report_skeleton(o.seed, tolerances(o), o.budget);
    int code = 0;
    if (corpus) {
        // Per-graph suites are independent; run them in parallel and emit in
        // corpus order.
        const auto entries_in = default_corpus();
        std::vector<std::future<json>> futures;
        futures.reserve(entries_in.size());
        for (const auto& e : entries_in)
            futures.push_back(std::async(std::launch::async, [&e, &o] {
                json one = verify_one(e.graph, o, /*with_certificates=*/false);
                one["name"] = e.name;
                one["generator"] =
                    json{{"kind", e.kind}, {"params", e.params}, {"seed", e.seed}};
                return one;
            }));
        json entries = json::array();
        for (auto& f : futures) {
            json one = f.get();
            code = std::max(code, verify_exit_code(one));
            entries.push_back(std::move(one));
        }
        doc["corpus"] = entries;
    } else {
        const auto g = load_edge_list(*path);
        json one = verify_one(g, o, /*with_certificates=*/true);
        for (auto& [key, value] : one.items()) doc[key] = value;
        code = verify_exit_code(one);
    }
    if (o.format == "text") {
        std::string text;
        auto render = [&](const json& one, const std::string& name) {
            for (const auto& c : one["checks"]) {
                text += name + " " + c["name"].get<std::string>() + " k=" +
                        std::to_string(c["k"].get<int>()) +
                        (c["skipped"].get<bool>() ? " SKIP"
                                                  : (c["pass"].get<bool>() ? " pass" : " FAIL")) +
                        "\n";
            }
        };
        if (corpus)
            for (const auto& one : doc["corpus"]) render(one, one["name"].get<std::string>());
        else
            render(doc, "graph");
        emit(o, text);
    } else {
        emit(o, dump_report(doc));
    }
    return code;
}

// --- markov -----------------------------------------------------------------

int cmd_markov(const std::string& path, std::optional<std::uint64_t> metropolis_seed,
               const CommonOpts& o) {
    reject_csv(o);
    const auto g = load_edge_list(path);
    const FiniteMarkovOperator op = metropolis_seed
                                        ? metropolis(g, random_target(g.size(), *metropolis_seed))
                                        : markov_from_graph(g);
    const int kmax = resolved_kmax(o, op.size());
    const auto rep = check_markov_hci(op, kmax, o.budget);
    const auto prof = markov_profiles(op, kmax, o.budget);

    if (o.format == "text") {
        std::string text;
        for (const auto& c : rep.checks)
            text += "k=" + std::to_string(c.k) + " lambda_bar=" + format_double(c.lambda_bar) +
                    " upper=" + format_double(c.upper_rhs) +
                    (c.upper_pass ? " pass" : " FAIL") + "\n";
        emit(o, text);
    } else {
        json doc = report_skeleton(o.seed, tolerances(o), o.budget);
        doc["graph"] = graph_descriptor(g);
        doc["operator"] = json{{"n", op.size()},
                               {"kind", metropolis_seed ? "metropolis" : "random-walk"},
                               {"mu", op.mu()}};
        json checks = json::array();
        for (const auto& c : rep.checks) checks.push_back(to_json(c));
        doc["checks"] = checks;
        doc["profiles"] = json{{"h", prof.h}, {"hbar", prof.hbar}};
        doc["lambda_bar"] = prof.lambda_bar;
        doc["all_upper_pass"] = rep.all_upper_pass;
        emit(o, dump_report(doc));
    }
    return rep.all_upper_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-way Cheeger / dual Cheeger constants and spectral bounds"};
    app.require_subcommand(1);

    CommonOpts gen_o, spec_o, ch_o, dch_o, cl_o, ver_o, mk_o;
    std::string gen_kind;
    std::vector<double> gen_params;
    std::string in_path;
    int cluster_k = 1;
    int cluster_attempts = 1000;
    bool use_corpus = false;
    std::optional<std::string> verify_path;
    std::optional<std::uint64_t> metro_seed;

    auto* gen = app.add_subcommand(
        "gen", "generate a graph (cycle N | path N | complete N | complete_bipartite A B | "
               "hypercube D | random_connected_weighted N DENSITY WMIN WMAX | random_tree N)");
    gen->add_option("kind", gen_kind)->required();
    gen->add_option("params", gen_params, "numeric parameters of the kind");
    add_common(gen, gen_o, false);

    auto* spectrum = app.add_subcommand("spectrum", "normalized Laplacian spectrum");
    spectrum->add_option("input", in_path)->required();
    add_common(spectrum, spec_o, false);

    auto* cheeger_cmd = app.add_subcommand("cheeger", "exact h(k) profile with witnesses");
    cheeger_cmd->add_option("input", in_path)->required();
    add_common(cheeger_cmd, ch_o);

    auto* dual = app.add_subcommand("dual-cheeger",
                                    "exact hbar(k) and hbar*(k) profiles with witnesses");
    dual->add_option("input", in_path)->required();
    add_common(dual, dch_o);

    auto* cluster = app.add_subcommand(
        "cluster", "certified k-sub-bipartition from the top-k eigenfunctions");
    cluster->add_option("input", in_path)->required();
    cluster->add_option("-k,--k", cluster_k, "number of pairs")->required();
    cluster->add_option("--attempts", cluster_attempts, "partition attempt cap (default 1000)");
    add_common(cluster, cl_o, false);

    auto* verify = app.add_subcommand("verify", "run the inequality suite");
    std::string verify_in;
    auto* vin = verify->add_option("input", verify_in);
    verify->add_flag("--corpus", use_corpus, "run over the built-in corpus");
    add_common(verify, ver_o);

    auto* markov = app.add_subcommand("markov", "reversible Markov operator checks");
    markov->add_option("input", in_path)->required();
    std::uint64_t metro_value = 0;
    auto* mopt = markov->add_option("--metropolis", metro_value,
                                    "use a Metropolis chain with a seeded random target");
    add_common(markov, mk_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0; usage problems are input errors
    }

    try {
        if (gen->parsed()) return cmd_gen(gen_kind, gen_params, gen_o);
        if (spectrum->parsed()) return cmd_spectrum(in_path, spec_o);
        if (cheeger_cmd->parsed()) return cmd_cheeger(in_path, ch_o, false);
        if (dual->parsed()) return cmd_cheeger(in_path, dch_o, true);
        if (cluster->parsed()) return cmd_cluster(in_path, cluster_k, cluster_attempts, cl_o);
        if (verify->parsed()) {
            if (vin->count()) verify_path = verify_in;
            if (!use_corpus && !verify_path) {
                std::cerr << "verify: need an input file or --corpus\n";
                return 2;
            }
            return cmd_verify(verify_path, use_corpus, ver_o);
        }
        if (markov->parsed()) {
            if (mopt->count()) metro_seed = metro_value;
            return cmd_markov(in_path, metro_seed, mk_o);
        }
    } catch (const EdgeListError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const PipelineError& e) {
        std::cerr << "pipeline error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
