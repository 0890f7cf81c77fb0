#include <abatch/cli.hpp>

#include <abatch/constructions.hpp>
#include <abatch/extremal.hpp>
#include <abatch/io.hpp>
#include <abatch/simulator.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

namespace abatch {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path.empty() || path == "-") return read_all(in);
    std::ifstream file(path);
    if (!file) throw UsageError("cannot open " + path);
    return read_all(file);
}

struct ConstructOpts {
    std::size_t m = 2;
    std::size_t eta = 7;
    std::size_t r = 3;
    std::string order = "lex";
    std::uint64_t seed = 1;
    std::size_t restarts = 1000;
    std::vector<std::size_t> slopes;
    std::string format = "json";
};

struct VerifyOpts {
    std::size_t t = 1;
    std::string mode = "strict";
    std::string input;
    std::size_t max_set_size = 0;
    std::uint64_t node_budget = kDefaultNodeBudget;
    std::uint64_t query_budget = 10'000'000;
};

struct SearchOpts {
    std::size_t eta = 0;
    std::size_t r = 0;
    std::size_t kappa = 0;
    std::uint64_t node_budget = 50'000'000;
};

Json construct_output(const GraphCode& gc) {
    return {{"code", matrix_to_json(gc.code)},
            {"report", report_to_json(gc.report)},
            {"graph", bipartite_to_json(gc.graph)}};
}

Json plain_code_output(const GeneratorMatrix& g, const std::string& family) {
    CodeReport rep;
    rep.n = g.n();
    rep.k = g.k();
    rep.rho = g.redundancy();
    rep.family = family;
    Json out{{"code", matrix_to_json(g)}, {"report", report_to_json(rep)}};
    out["report"].erase("t");
    return out;
}

int emit_code(const Json& doc, const std::string& format, std::ostream& out) {
    if (format == "text") {
        out << matrix_to_text(matrix_from_json(doc["code"]));
    } else {
        out << doc.dump(2) << "\n";
    }
    return kExitOk;
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::holds: return kExitOk;
        case Verdict::fails: return kExitFalse;
        case Verdict::budget_exceeded: return kExitUnknown;
    }
    return kExitUnknown;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    const auto colon = s.find_first_of(":-");
    try {
        if (colon == std::string::npos) {
            const auto v = std::stoul(s);
            return {v, v};
        }
        return {std::stoul(s.substr(0, colon)), std::stoul(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw UsageError("k range must look like 4:100");
    }
}

std::string table_line(const RedundancyRow& row) {
    std::ostringstream os;
    os << std::setw(6) << row.k << std::setw(6) << row.rho << std::setw(10) << std::fixed << std::setprecision(3)
       << row.lower_bound << std::setw(10) << row.rao_vardy << std::setw(8) << row.ratio << std::setw(7)
       << (row.tight ? "yes" : "no") << "  " << row.construction;
    return os.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graph-based asynchronous batch codes: constructions, verifiers, extremal search, simulation"};
    app.require_subcommand(1);
    int code = kExitOk;

    // construct
    ConstructOpts co;
    auto* construct = app.add_subcommand("construct", "Build a code family and print it");
    construct->require_subcommand(1);
    construct->add_option("--format", co.format, "json or text (matrix only)")
        ->check(CLI::IsMember({"json", "text"}));
    auto* c_t3 = construct->add_subcommand("t3", "Subdivided K_{m,m}, t = 3");
    c_t3->add_option("--m", co.m, "side of the complete bipartite graph")->required()->check(CLI::Range(2, 64));
    auto* c_pack = construct->add_subcommand("packing", "PIR code from a greedy 2-(eta,r,1) packing");
    c_pack->add_option("--eta", co.eta)->required();
    c_pack->add_option("--r", co.r)->required();
    c_pack->add_option("--order", co.order, "lex or random")->check(CLI::IsMember({"lex", "random"}));
    c_pack->add_option("--seed", co.seed);
    c_pack->add_option("--restarts", co.restarts);
    auto* c_efr = construct->add_subcommand("efr", "Grid-line hypergraph code with 3AP-free slopes");
    c_efr->add_option("--m", co.m)->required();
    c_efr->add_option("--r", co.r);
    c_efr->add_option("--slopes", co.slopes, "slope set (default: best Behrend-type set)")->delimiter(',');
    auto* c_simplex = construct->add_subcommand("simplex", "The [7,3] simplex code");
    auto* c_ex1 = construct->add_subcommand("example1", "The [8,4] code studied at t = 3");
    for (auto* sub : {c_t3, c_pack, c_efr, c_simplex, c_ex1}) {
        sub->add_option("--format", co.format, "json or text (matrix only)")->check(CLI::IsMember({"json", "text"}));
    }

    // verify
    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Decide a retrieval property of a code read from a file or stdin");
    verify->require_subcommand(1);
    std::vector<CLI::App*> verify_subs;
    for (const char* name : {"batch", "pir", "async"}) {
        auto* sub = verify->add_subcommand(name);
        sub->add_option("--t", vo.t, "query size")->required()->check(CLI::PositiveNumber);
        sub->add_option("--input,-i", vo.input, "matrix file (text or JSON); stdin when omitted");
        sub->add_option("--max-set-size", vo.max_set_size, "recovery-set size cap (0 = n)");
        sub->add_option("--node-budget", vo.node_budget);
        sub->add_option("--query-budget", vo.query_budget);
        verify_subs.push_back(sub);
    }
    verify_subs[2]
        ->add_option("--mode", vo.mode, "strict, scheduled or relaxed")
        ->check(CLI::IsMember({"strict", "scheduled", "relaxed"}));

    // certify-theorem1
    std::size_t cert_t = 1;
    std::string cert_target = "batch";
    std::string cert_input;
    auto* certify = app.add_subcommand("certify-theorem1", "Search for a girth/degree certificate on a bipartite graph");
    certify->add_option("--t", cert_t)->required()->check(CLI::PositiveNumber);
    certify->add_option("--target", cert_target)->check(CLI::IsMember({"batch", "pir"}));
    certify->add_option("--input,-i", cert_input, "bipartite JSON (or construct output); stdin when omitted");

    // search
    SearchOpts so;
    auto* search = app.add_subcommand("search", "Exact extremal hypergraph search");
    search->require_subcommand(1);
    std::vector<CLI::App*> search_subs;
    for (const char* name : {"B", "F", "theorem5"}) {
        auto* sub = search->add_subcommand(name);
        sub->add_option("--eta", so.eta)->required();
        sub->add_option("--r", so.r)->required();
        sub->add_option("--kappa", so.kappa)->required();
        sub->add_option("--node-budget", so.node_budget);
        search_subs.push_back(sub);
    }

    // bounds
    std::size_t bounds_t = 3;
    std::string k_range = "4:64";
    std::string bounds_format = "table";
    auto* bounds = app.add_subcommand("bounds", "Constructed redundancy against 2 sqrt(k)");
    bounds->add_option("--t", bounds_t)->required();
    bounds->add_option("--k-range", k_range, "inclusive range lo:hi");
    bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"table", "json"}));

    // simulate
    std::string sim_config;
    std::optional<std::uint64_t> sim_seed;
    std::string sim_trace;
    auto* simulate_cmd = app.add_subcommand("simulate", "Discrete-event retrieval simulation");
    simulate_cmd->add_option("--config", sim_config, "SimConfig JSON file")->required();
    simulate_cmd->add_option("--seed", sim_seed, "RNG seed (required for stochastic runs)");
    simulate_cmd->add_option("--trace", sim_trace, "write the JSON-lines trace here ('-' for stdout)");

    // audit
    std::string audit_trace_path;
    std::string audit_code;
    std::size_t audit_t = 1;
    auto* audit = app.add_subcommand("audit", "Check a simulation trace independently of the scheduler");
    audit->add_option("--trace", audit_trace_path)->required();
    audit->add_option("--code", audit_code, "matrix file, or example1 / simplex")->required();
    audit->add_option("--t", audit_t)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto load_builtin_or_file = [&](const std::string& spec) {
        if (spec == "example1") return example1_code();
        if (spec == "simplex") return simplex_counterexample();
        return read_matrix(read_input(spec, in));
    };

    try {
        if (construct->parsed()) {
            if (c_t3->parsed()) return emit_code(construct_output(construct_t3_optimal(co.m)), co.format, out);
            if (c_pack->parsed()) {
                PackingOptions po;
                po.order = co.order == "lex" ? PackingOrder::lexicographic : PackingOrder::seeded_random;
                po.seed = co.seed;
                po.restarts = co.restarts;
                const PackingDesign d = greedy_packing(co.eta, co.r, po);
                Json doc = construct_output(pir_code_from_packing(d));
                doc["hypergraph"] = hypergraph_to_text(d.hypergraph());
                doc["johnson_bound"] = johnson_bound(co.eta, co.r);
                return emit_code(doc, co.format, out);
            }
            if (c_efr->parsed()) {
                const auto slopes = co.slopes.empty() ? efr_slopes(co.m, co.r) : co.slopes;
                const EfrHypergraph h = efr_hypergraph(co.m, co.r, slopes);
                Json doc = construct_output(efr_code(h));
                doc["hypergraph"] = hypergraph_to_text(h.hypergraph);
                doc["slopes"] = h.slopes;
                doc["repaired"] = h.repaired;
                return emit_code(doc, co.format, out);
            }
            if (c_simplex->parsed()) return emit_code(plain_code_output(simplex_counterexample(), "simplex"), co.format, out);
            return emit_code(plain_code_output(example1_code(), "example1"), co.format, out);
        }

        if (verify->parsed()) {
            const GeneratorMatrix g = read_matrix(read_input(vo.input, in));
            SearchLimits limits;
            limits.max_set_size = vo.max_set_size;
            limits.node_budget = vo.node_budget;
            limits.query_budget = vo.query_budget;
            if (verify_subs[0]->parsed()) {
                const BatchResult r = is_batch_code(g, vo.t, limits);
                out << batch_result_to_json(r, vo.t).dump(2) << "\n";
                return verdict_exit(r.verdict);
            }
            if (verify_subs[1]->parsed()) {
                const PirResult r = is_pir_code(g, vo.t, limits);
                out << pir_result_to_json(r, vo.t).dump(2) << "\n";
                return verdict_exit(r.verdict);
            }
            const AsyncResult r = is_asynchronous_batch_code(g, vo.t, parse_async_mode(vo.mode), limits);
            out << async_result_to_json(r, vo.t).dump(2) << "\n";
            return verdict_exit(r.verdict);
        }

        if (certify->parsed()) {
            const BipartiteGraph g = read_bipartite(read_input(cert_input, in));
            const auto target = cert_target == "batch" ? CertifyTarget::batch : CertifyTarget::pir;
            const Theorem1Certificate c = theorem1_certify(g, cert_t, target);
            out << certificate_to_json(c).dump(2) << "\n";
            return c.status == CertifyStatus::certified ? kExitOk : kExitUnknown;
        }

        if (search->parsed()) {
            ExtremalLimits limits{so.node_budget};
            if (search_subs[2]->parsed()) {
                const ExtremalResult r = verify_theorem5(so.eta, so.r, so.kappa, limits);
                out << extremal_to_json(r).dump() << "\n";
                if (!r.exact()) return kExitUnknown;
                return r.equal() && r.rewire_ok ? kExitOk : kExitFalse;
            }
            const bool girth = search_subs[0]->parsed();
            const ExtremalSearch s = girth ? max_edges_berge_girth(so.eta, so.r, so.kappa, limits)
                                           : max_edges_condition(so.eta, so.r, so.kappa, limits);
            Json row = search_to_json(s, so.eta, so.r, so.kappa);
            row[girth ? "B" : "F"] = s.value;
            out << row.dump() << "\n";
            return s.exact ? kExitOk : kExitUnknown;
        }

        if (bounds->parsed()) {
            const auto [lo, hi] = parse_range(k_range);
            const auto rows = redundancy_table(bounds_t, lo, hi);
            if (bounds_format == "json") {
                Json arr = Json::array();
                for (const auto& row : rows) arr.push_back(redundancy_row_to_json(row));
                out << Json{{"t", bounds_t}, {"rows", arr}, {"ratio_nondecreasing", ratio_nondecreasing(rows)}}.dump(2)
                    << "\n";
            } else {
                out << "     k   rho    2sqrtk    sqrt2k   ratio  tight  construction\n";
                for (const auto& row : rows) out << table_line(row) << "\n";
                out << "ratio non-decreasing: " << (ratio_nondecreasing(rows) ? "yes" : "no") << "\n";
            }
            return kExitOk;
        }

        if (simulate_cmd->parsed()) {
            Json j = Json::parse(read_input(sim_config, in));
            const bool stochastic = (j.contains("latency") && j["latency"].value("model", "") == "exponential") ||
                                    (j.contains("workload") && j["workload"].is_object());
            if (sim_seed) {
                j["seed"] = *sim_seed;
            } else if (stochastic) {
                throw UsageError("--seed is required for stochastic simulations");
            }
            const SimConfig cfg = sim_config_from_json(j);
            const RetrievalTrace trace = simulate(cfg);
            const std::string jsonl = trace_to_jsonl(trace);
            if (sim_trace == "-") {
                out << jsonl;
            } else if (!sim_trace.empty()) {
                std::ofstream f(sim_trace);
                if (!f) throw UsageError("cannot write " + sim_trace);
                f << jsonl;
            }
            for (const auto& w : trace.warnings) err << "warning: " << w << "\n";
            const SimStats& s = trace.stats;
            std::ostream& summary = sim_trace == "-" ? err : out;
            summary << "mode           " << to_string(cfg.mode) << (cfg.relaxed ? " (relaxed)" : "") << "\n"
                    << "requests       " << s.requests << "\n"
                    << "t              " << cfg.t << "\n"
                    << "makespan       " << s.makespan << "\n"
                    << "mean response  " << s.mean_response << "\n"
                    << "mean occupancy " << s.mean_occupancy << "\n"
                    << "stalls         " << s.stalls << "\n"
                    << "replans        " << s.replans << "\n";
            return kExitOk;
        }

        if (audit->parsed()) {
            const GeneratorMatrix g = load_builtin_or_file(audit_code);
            const AuditReport rep = audit_trace(read_input(audit_trace_path, in), g, audit_t);
            out << Json{{"events", rep.events},
                        {"disjointness_violations", rep.disjointness_violations},
                        {"budget_violations", rep.budget_violations},
                        {"decoding_violations", rep.decoding_violations},
                        {"format_errors", rep.format_errors},
                        {"messages", rep.messages},
                        {"ok", rep.ok()}}
                       .dump(2)
                << "\n";
            return rep.ok() ? kExitOk : kExitFalse;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitUnknown;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUnknown;
    }
    return code;
}

}  // namespace abatch
