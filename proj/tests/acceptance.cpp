// Acceptance harness: one PASS/FAIL line per criterion, extra detail on
// "info" lines. Exits 1 when any criterion fails.

#include <abatch/constructions.hpp>
#include <abatch/extremal.hpp>
#include <abatch/graphcore.hpp>
#include <abatch/io.hpp>
#include <abatch/linear_code.hpp>
#include <abatch/simulator.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace abatch;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void info(const std::string& msg) { std::printf("  info: %s\n", msg.c_str()); }

void criterion(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("criterion %d %s: %s (%s)\n", id, ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(double v, int prec = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

std::string yes(bool b) { return b ? "true" : "false"; }

// Plain O(n^2) scan for x < y < z in s with x + z = 2y.
bool oracle_3ap_free(const std::vector<std::size_t>& s) {
    std::set<std::size_t> in(s.begin(), s.end());
    if (in.size() != s.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s[i] < s[j] && in.count(2 * s[j] - s[i])) return false;
    return true;
}

// Independent cycle rank of the incidence graph: |E| - |V| + components, by DFS.
long long oracle_cycle_rank(const Hypergraph& h) {
    const std::size_t m = h.edge_count();
    const std::size_t nodes = m + h.v_size();
    std::vector<std::vector<std::size_t>> adj(nodes);
    long long links = 0;
    for (std::size_t e = 0; e < m; ++e)
        for (auto v : h.edge(e)) {
            adj[e].push_back(m + v);
            adj[m + v].push_back(e);
            ++links;
        }
    std::vector<bool> seen(nodes, false);
    long long comps = 0;
    for (std::size_t s = 0; s < nodes; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<std::size_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (auto w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return links - static_cast<long long>(nodes) + comps;
}

// Shortest cycle of the incidence graph by BFS from every node, tracking parent edges.
std::optional<std::size_t> oracle_incidence_girth(const Hypergraph& h) {
    const std::size_t m = h.edge_count();
    const std::size_t nodes = m + h.v_size();
    std::vector<std::vector<std::size_t>> adj(nodes);
    for (std::size_t e = 0; e < m; ++e)
        for (auto v : h.edge(e)) {
            adj[e].push_back(m + v);
            adj[m + v].push_back(e);
        }
    std::optional<std::size_t> best;
    const std::size_t none = static_cast<std::size_t>(-1);
    for (std::size_t s = 0; s < nodes; ++s) {
        std::vector<std::size_t> dist(nodes, none), parent(nodes, none);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (auto w : adj[u]) {
                if (dist[w] == none) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (parent[u] != w) {
                    const std::size_t len = dist[u] + dist[w] + 1;
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

// Every kappa edges span at least kappa*(r-1)+1 vertices, by subset recursion.
bool oracle_condition(const Hypergraph& h, std::size_t kappa, std::size_t r) {
    const std::size_t m = h.edge_count();
    if (m < kappa) return true;
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t)> go = [&](std::size_t from) {
        if (pick.size() == kappa) {
            std::set<std::size_t> span;
            for (auto e : pick) span.insert(h.edge(e).begin(), h.edge(e).end());
            return span.size() >= kappa * (r - 1) + 1;
        }
        for (std::size_t e = from; e < m; ++e) {
            pick.push_back(e);
            const bool ok = go(e + 1);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return go(0);
}

Hypergraph random_uniform(std::mt19937_64& rng, std::size_t v, std::size_t m, std::size_t r) {
    std::vector<std::vector<std::size_t>> edges;
    std::vector<std::size_t> pts(v);
    std::iota(pts.begin(), pts.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
        std::shuffle(pts.begin(), pts.end(), rng);
        edges.emplace_back(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(r));
    }
    return Hypergraph(v, edges);
}

std::string query_str(const Query& q) {
    std::string s = "(";
    for (std::size_t i = 0; i < q.indices.size(); ++i) s += (i ? ",x" : "x") + std::to_string(q.indices[i] + 1);
    return s + ")";
}

void criterion1() {
    bool ok = true;
    std::string detail;
    {
        const auto t0 = Clock::now();
        const auto g = example1_code();
        const bool batch = is_batch_code(g, 3).holds();
        const bool pir = is_pir_code(g, 3).holds();
        const auto async = is_asynchronous_batch_code(g, 3);
        const double dt = seconds_since(t0);
        info("example1 t=3: batch=" + yes(batch) + " pir=" + yes(pir) + " async-strict=" + yes(async.holds()) +
             " in " + fmt(dt, 3) + " s");
        if (async.witness) {
            std::string sets;
            for (const auto& s : async.witness->assignment.sets) {
                sets += " {";
                for (auto i : s.coords.indices()) sets += std::to_string(i + 1) + (i == s.coords.indices().back() ? "" : ",");
                sets += "}";
            }
            info("example1 strict witness: query " + query_str(async.witness->query) + " sets" + sets +
                 ", position " + std::to_string(async.witness->completed_position + 1) + " completes, newcomer x" +
                 std::to_string(async.witness->newcomer + 1) + " finds no free set");
        }
        info("example1 t=3 scheduled=" + yes(is_asynchronous_batch_code(g, 3, AsyncMode::scheduled).holds()) +
             " relaxed=" + yes(is_asynchronous_batch_code(g, 3, AsyncMode::relaxed).holds()));
        ok = ok && batch && pir && async.holds() && dt < 10;
        detail += "example1 batch/pir/async-strict = " + yes(batch) + "/" + yes(pir) + "/" + yes(async.holds());
    }
    {
        const auto t0 = Clock::now();
        const auto g = simplex_counterexample();
        const bool batch = is_batch_code(g, 4).holds();
        const bool pir = is_pir_code(g, 4).holds();
        const auto async = is_asynchronous_batch_code(g, 4);
        const double dt = seconds_since(t0);
        bool witness_ok = false;
        if (async.witness) {
            witness_ok = async.witness->query.indices == std::vector<std::size_t>{0, 0, 0, 0} &&
                         async.witness->newcomer == 1;
            info("simplex strict witness: query " + query_str(async.witness->query) + ", newcomer x" +
                 std::to_string(async.witness->newcomer + 1));
        }
        info("simplex t=4: batch=" + yes(batch) + " pir=" + yes(pir) + " async-strict=" + yes(async.holds()) +
             " in " + fmt(dt, 3) + " s");
        ok = ok && batch && pir && !async.holds() && witness_ok && dt < 10;
        detail += "; simplex batch/pir/async-strict = " + yes(batch) + "/" + yes(pir) + "/" + yes(async.holds()) +
                  ", witness " + (witness_ok ? "matches" : "differs");
    }
    criterion(1, "golden examples", ok, detail);
}

void criterion2() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t m = 2; m <= 5; ++m) {
        const auto gc = construct_t3_optimal(m);
        const std::size_t k = gc.code.k();
        const std::size_t rho = gc.code.redundancy();
        const auto root = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(k))));
        const bool shape = girth(gc.graph) == 8u && k == m * m && rho == 2 * m && root * root == k && rho == 2 * root;
        std::string line = "m=" + std::to_string(m) + ": k=" + std::to_string(k) + " rho=" + std::to_string(rho) +
                           " girth=" + (girth(gc.graph) ? std::to_string(*girth(gc.graph)) : "none") +
                           " certified_by=" + gc.report.certified_by;
        ok = ok && shape;
        if (m <= 3) {
            const bool batch = is_batch_code(gc.code, 3).holds();
            const bool strict = is_asynchronous_batch_code(gc.code, 3).holds();
            const bool sched = is_asynchronous_batch_code(gc.code, 3, AsyncMode::scheduled).holds();
            line += " batch=" + yes(batch) + " async-strict=" + yes(strict) + " scheduled=" + yes(sched);
            ok = ok && batch && strict;
            detail += (detail.empty() ? "" : ", ") + std::string("m=") + std::to_string(m) +
                      " async-strict=" + yes(strict);
        }
        info(line);
    }
    const double dt = seconds_since(t0);
    ok = ok && dt < 120;
    criterion(2, "t=3 bound tightness", ok, detail + ", shapes and rho=2sqrt(k) checked, " + fmt(dt) + " s");
}

void criterion3() {
    const auto t0 = Clock::now();
    const std::vector<std::array<std::size_t, 3>> triples{
        {4, 2, 3}, {5, 2, 3}, {6, 2, 3}, {6, 3, 2}, {7, 3, 2}, {6, 3, 3}};
    bool ok = true;
    for (const auto& [eta, r, kappa] : triples) {
        const auto res = verify_theorem5(eta, r, kappa);
        bool line_ok = res.equal();
        std::string line = "(" + std::to_string(eta) + "," + std::to_string(r) + "," + std::to_string(kappa) +
                           "): B=" + std::to_string(res.b.value) + " F=" + std::to_string(res.f.value) +
                           " exact=" + yes(res.exact()) + " rewire=" + yes(res.rewire_ok) +
                           " nodes=" + std::to_string(res.nodes());
        if (r == 2 && kappa == 3) {
            const bool mantel = res.b.value == eta * eta / 4;
            line += " mantel=" + yes(mantel);
            line_ok = line_ok && mantel;
        }
        info(line);
        ok = ok && line_ok;
    }
    const auto extra = verify_theorem5(8, 3, 3);
    info("(8,3,3) outside the required set: B=" + std::to_string(extra.b.value) + " F=" +
         std::to_string(extra.f.value) + " rewire=" + yes(extra.rewire_ok) +
         (extra.rewire_note.empty() ? "" : " (" + extra.rewire_note + ")"));
    const double dt = seconds_since(t0);
    ok = ok && dt < 600;
    criterion(3, "extremal equality B=F", ok, std::to_string(triples.size()) + " triples, " + fmt(dt) + " s");
}

void criterion4() {
    std::mt19937_64 rng(2024);
    const std::size_t instances = 1500;
    std::size_t classify_checked = 0, classify_bad = 0;
    std::size_t implication_premises = 0, implication_bad = 0;
    std::size_t rewire_valid = 0, rewire_good = 0, rewire_throw = 0, rewire_scarce = 0;
    std::string first_rewire_failure;
    for (std::size_t it = 0; it < instances; ++it) {
        const std::size_t r = 2 + rng() % 2;
        const std::size_t kappa = 2 + rng() % 2;
        const std::size_t v = r + 1 + rng() % 10;
        const std::size_t m = 1 + rng() % 6;
        const auto h = random_uniform(rng, v, m, r);

        // cycle-space classification on the Berge-connected part
        if (is_berge_connected(h) && v >= 2) {
            ++classify_checked;
            const auto c = lemma4_classify(h);
            const long long rank = oracle_cycle_rank(h);
            const CycleClass expect =
                rank == 0 ? CycleClass::tree : (rank == 1 ? CycleClass::unicyclic : CycleClass::multicyclic);
            if (c.checksum != rank || static_cast<long long>(c.cycle_rank) != rank || c.kind != expect) ++classify_bad;
        }

        const bool cond = oracle_condition(h, kappa, r);
        const auto bg = berge_girth(h);
        if (!bg || *bg >= kappa + 1) {
            ++implication_premises;
            if (!cond) ++implication_bad;
        }

        if (cond && v >= kappa * (r - 1) + 1) {
            ++rewire_valid;
            try {
                const auto res = rewire(h, kappa);
                const auto nb = berge_girth(res.hypergraph);
                if (res.hypergraph.edge_count() == h.edge_count() && (!nb || *nb >= kappa + 1) &&
                    oracle_condition(res.hypergraph, kappa, r))
                    ++rewire_good;
            } catch (const std::exception& e) {
                ++rewire_throw;
                if (first_rewire_failure.empty())
                    first_rewire_failure = hypergraph_to_text(h) + " kappa=" + std::to_string(kappa) + ": " + e.what();
            }
        } else if (cond) {
            ++rewire_scarce;
        }
    }
    // stress rewiring on inputs with short Berge cycles
    std::size_t stressed = 0;
    for (std::size_t it = 0; it < 1000; ++it) {
        const std::size_t r = 3;
        const std::size_t kappa = 3;
        const std::size_t v = 10 + rng() % 6;
        const auto h = random_uniform(rng, v, 2 + rng() % 2, r);
        const auto bg = berge_girth(h);
        if (!bg || *bg > kappa || !oracle_condition(h, kappa, r)) continue;
        ++stressed;
        ++rewire_valid;
        try {
            const auto res = rewire(h, kappa);
            const auto nb = berge_girth(res.hypergraph);
            if (res.hypergraph.edge_count() == h.edge_count() && (!nb || *nb >= kappa + 1) &&
                oracle_condition(res.hypergraph, kappa, r))
                ++rewire_good;
        } catch (const std::exception& e) {
            ++rewire_throw;
            if (first_rewire_failure.empty())
                first_rewire_failure = hypergraph_to_text(h) + " kappa=" + std::to_string(kappa) + ": " + e.what();
        }
    }
    info("classification: " + std::to_string(classify_checked) + " connected instances, " +
         std::to_string(classify_bad) + " mismatches against an independent cycle-rank count");
    info("girth => condition: " + std::to_string(implication_premises) + " premises, " +
         std::to_string(implication_bad) + " violations");
    info("rewire: " + std::to_string(rewire_good) + "/" + std::to_string(rewire_valid) + " valid inputs fixed (" +
         std::to_string(stressed) + " with short cycles), " + std::to_string(rewire_throw) + " threw; " +
         std::to_string(rewire_scarce) + " inputs with eta < kappa(r-1)+1 skipped");
    if (!first_rewire_failure.empty()) {
        std::string flat = first_rewire_failure;
        std::replace(flat.begin(), flat.end(), '\n', '|');
        info("first rewire failure: " + flat);
    }
    const bool ok = instances >= 1000 && classify_checked > 0 && classify_bad == 0 && implication_bad == 0 &&
                    rewire_good == rewire_valid;
    criterion(4, "structural lemma suite", ok,
              std::to_string(instances) + " random hypergraphs, rewire " + std::to_string(rewire_good) + "/" +
                  std::to_string(rewire_valid));
}

void criterion5() {
    const auto t0 = Clock::now();
    const auto d7 = greedy_packing(7, 3);
    const auto c7 = pir_code_from_packing(d7);
    const bool pir7 = is_pir_code(c7.code, 4).holds();
    PackingOptions opt;
    opt.order = PackingOrder::seeded_random;
    opt.seed = 1;
    opt.restarts = 1000;
    const auto d9 = greedy_packing(9, 3, opt);
    const auto c9 = pir_code_from_packing(d9);
    const bool pir9 = is_pir_code(c9.code, 4).holds();
    const auto d9lex = greedy_packing(9, 3);
    info("eta=7: " + std::to_string(d7.blocks.size()) + " blocks, johnson " + std::to_string(johnson_bound(7, 3)) +
         ", code [" + std::to_string(c7.code.n()) + "," + std::to_string(c7.code.k()) + "] pir t=4 " + yes(pir7));
    info("eta=9 (seeded random order, seed 1): " + std::to_string(d9.blocks.size()) + " blocks, johnson " +
         std::to_string(johnson_bound(9, 3)) + ", code [" + std::to_string(c9.code.n()) + "," +
         std::to_string(c9.code.k()) + "] pir t=4 " + yes(pir9) + "; lexicographic order gives " +
         std::to_string(d9lex.blocks.size()) + " blocks");
    const bool ok = d7.valid() && d7.blocks.size() == 7 && johnson_bound(7, 3) == 7 && c7.code.n() == 14 &&
                    c7.code.k() == 7 && pir7 && d9.valid() && d9.blocks.size() == 12 && pir9;
    criterion(5, "PIR codes from packings", ok, fmt(seconds_since(t0)) + " s");
}

void criterion6() {
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (std::size_t m : {6, 9}) {
        const auto slopes = efr_slopes(m, 3);
        const auto h = efr_hypergraph(m, 3, slopes);
        const auto gc = efr_code(h);
        const bool girth_ok = h.berge_girth && *h.berge_girth >= 4;
        const auto ts = Clock::now();
        const auto strict = is_asynchronous_batch_code(gc.code, 4);
        const bool sched = is_asynchronous_batch_code(gc.code, 4, AsyncMode::scheduled).holds();
        const bool batch = is_batch_code(gc.code, 4).holds();
        std::string sl;
        for (auto a : slopes) sl += (sl.empty() ? "" : ",") + std::to_string(a);
        info("m=" + std::to_string(m) + " slopes {" + sl + "}: edges=" + std::to_string(h.hypergraph.edge_count()) +
             " berge_girth=" + (h.berge_girth ? std::to_string(*h.berge_girth) : "none") + " code [" +
             std::to_string(gc.code.n()) + "," + std::to_string(gc.code.k()) + "] batch=" + yes(batch) +
             " async-strict=" + yes(strict.holds()) + " scheduled=" + yes(sched) + " (" + fmt(seconds_since(ts)) +
             " s)");
        if (strict.witness)
            info("m=" + std::to_string(m) + " strict witness query " + query_str(strict.witness->query) +
                 ", newcomer x" + std::to_string(strict.witness->newcomer + 1));
        ok = ok && girth_ok && strict.holds();
        detail += "m=" + std::to_string(m) + " girth>=4 " + yes(girth_ok) + " async-strict " + yes(strict.holds()) + "; ";
    }
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= 100; ++n) {
        const auto s = behrend_set(n);
        const bool in_range = std::all_of(s.begin(), s.end(), [&](std::size_t x) { return x >= 1 && x <= n; });
        if (!in_range || !oracle_3ap_free(s)) ++bad;
    }
    info("behrend_set(n) for n<=100: " + std::to_string(bad) + " sets fail the exhaustive 3AP check; |set(100)|=" +
         std::to_string(behrend_set(100).size()));
    ok = ok && bad == 0;
    detail += "behrend 3AP-free " + yes(bad == 0) + "; ";

    const auto rows = redundancy_table(4, 1, 12500);
    const bool mono = ratio_nondecreasing(rows);
    std::size_t drops = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].ratio < rows[i - 1].ratio) ++drops;
    if (!rows.empty())
        info("t=4 rho/sqrt(k) over " + std::to_string(rows.size()) + " family members: first " +
             fmt(rows.front().ratio) + " (k=" + std::to_string(rows.front().k) + "), min " +
             fmt(std::min_element(rows.begin(), rows.end(), [](auto& a, auto& b) { return a.ratio < b.ratio; })->ratio) +
             ", last " + fmt(rows.back().ratio) + " (k=" + std::to_string(rows.back().k) + "), " +
             std::to_string(drops) + " decreases");
    ok = ok && mono;
    detail += "ratio non-decreasing " + yes(mono) + ", " + fmt(seconds_since(t0)) + " s";
    criterion(6, "grid-line pipeline", ok, detail);
}

void criterion7() {
    const auto t0 = Clock::now();
    const auto ex1_json = Json::parse(R"({"code":"example1","t":3,"workload":{"uniform":100},
        "latency":{"model":"exponential","value":1.0},"seed":42})");
    const SimConfig ex1 = sim_config_from_json(ex1_json);
    const auto tr1 = simulate(ex1);
    const auto jsonl1 = trace_to_jsonl(tr1);
    const bool identical = jsonl1 == trace_to_jsonl(simulate(ex1));
    const auto audit1 = audit_trace(jsonl1, ex1.code, 3);

    auto relaxed = ex1;
    relaxed.relaxed = true;
    const auto trr = simulate(relaxed);
    const auto auditr = audit_trace(trace_to_jsonl(trr), relaxed.code, 3);

    SimConfig sx;
    sx.code = simplex_counterexample();
    sx.t = 4;
    sx.workload = {0, 0, 0, 0, 1};
    sx.latency.kind = LatencyKind::deterministic;
    sx.latency.per_server = {1, 10, 10, 10, 10, 10, 10};
    const auto tr2 = simulate(sx);
    const auto jsonl2 = trace_to_jsonl(tr2);
    const bool identical2 = jsonl2 == trace_to_jsonl(simulate(sx));
    const auto audit2 = audit_trace(jsonl2, sx.code, 4);

    info("example1 async seed 42, 100 requests, exponential mean 1: stalls=" + std::to_string(tr1.stats.stalls) +
         " makespan=" + fmt(tr1.stats.makespan) + " audit disjointness=" +
         std::to_string(audit1.disjointness_violations) + " budget=" + std::to_string(audit1.budget_violations) +
         " decoding=" + std::to_string(audit1.decoding_violations));
    info("example1 with joint re-planning: stalls=" + std::to_string(trr.stats.stalls) +
         " replans=" + std::to_string(trr.stats.replans) + " audit ok=" + yes(auditr.ok()));
    info("simplex t=4 workload (x1,x1,x1,x1,x2), server 1 fast: stalls=" + std::to_string(tr2.stats.stalls) +
         " audit ok=" + yes(audit2.ok()));
    const bool ok = tr1.stats.stalls == 0 && tr2.stats.stalls >= 1 && identical && identical2 &&
                    audit1.disjointness_violations == 0 && audit2.disjointness_violations == 0;
    criterion(7, "simulator", ok,
              "example1 stalls=" + std::to_string(tr1.stats.stalls) + ", simplex stalls=" +
                  std::to_string(tr2.stats.stalls) + ", identical traces " + yes(identical && identical2) +
                  ", disjointness violations " +
                  std::to_string(audit1.disjointness_violations + audit2.disjointness_violations) + ", " +
                  fmt(seconds_since(t0)) + " s");
}

void criterion8() {
    std::mt19937_64 rng(8);
    const std::size_t instances = 1000;
    std::size_t identity_bad = 0, girth_bad = 0, cyclic = 0;
    for (std::size_t it = 0; it < instances; ++it) {
        const std::size_t v = 2 + rng() % 9;
        const std::size_t m = 1 + rng() % 7;
        std::vector<std::vector<std::size_t>> edges;
        for (std::size_t i = 0; i < m; ++i) {
            const std::size_t size = 1 + rng() % std::min<std::size_t>(v, 4);
            std::vector<std::size_t> pts(v);
            std::iota(pts.begin(), pts.end(), 0);
            std::shuffle(pts.begin(), pts.end(), rng);
            edges.emplace_back(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(size));
        }
        const Hypergraph h(v, edges);
        const auto inc = incidence_graph(h);
        if (!(hypergraph_from_bipartite(inc) == h)) ++identity_bad;
        const auto bg = berge_girth(h);
        const auto ig = girth(inc);
        const auto og = oracle_incidence_girth(h);
        if (bg) ++cyclic;
        const bool agree = bool(bg) == bool(og) && bool(ig) == bool(og) && (!og || (*og == 2 * *bg && *ig == *og));
        if (!agree) ++girth_bad;
    }
    info(std::to_string(instances) + " random hypergraphs (" + std::to_string(cyclic) + " with a Berge cycle): " +
         std::to_string(identity_bad) + " round-trip mismatches, " + std::to_string(girth_bad) +
         " girth mismatches against an independent BFS");
    criterion(8, "incidence round trip", identity_bad == 0 && girth_bad == 0,
              std::to_string(instances) + " instances");
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    std::printf("%d of 8 criteria failed, %.1f s total\n", failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
