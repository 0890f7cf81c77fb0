#include <abatch/simulator.hpp>

#include <abatch/constructions.hpp>
#include <abatch/io.hpp>

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <sstream>

namespace abatch {

std::string to_string(SimMode m) { return m == SimMode::sync ? "sync" : "async"; }

double LatencyModel::parameter(std::size_t server) const {
    if (per_server.empty()) return 1.0;
    if (per_server.size() == 1) return per_server.front();
    return per_server.at(server);
}

SimConfig sim_config_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("simulation config must be a JSON object", 0);
    SimConfig cfg;
    try {
        const Json& code = j.at("code");
        if (code.is_string()) {
            const std::string name = code.get<std::string>();
            if (name == "example1") {
                cfg.code = example1_code();
            } else if (name == "simplex") {
                cfg.code = simplex_counterexample();
            } else {
                throw ParseError("unknown built-in code \"" + name + "\"", 0);
            }
        } else {
            cfg.code = matrix_from_json(code);
        }
        cfg.t = j.at("t").get<std::size_t>();
        if (cfg.t == 0) throw ParseError("\"t\" must be at least 1", 0);
        cfg.seed = j.value("seed", std::uint64_t{0});
        cfg.relaxed = j.value("relaxed", false);
        const std::string mode = j.value("mode", std::string("async"));
        if (mode == "sync") {
            cfg.mode = SimMode::sync;
        } else if (mode == "async") {
            cfg.mode = SimMode::async;
        } else {
            throw ParseError("mode must be \"sync\" or \"async\"", 0);
        }

        const Json& w = j.at("workload");
        if (w.is_array()) {
            for (const auto& x : w) {
                const auto v = x.get<std::size_t>();
                if (v < 1 || v > cfg.code.k()) {
                    throw ParseError("workload index " + std::to_string(v) + " outside 1..k", 0);
                }
                cfg.workload.push_back(v - 1);
            }
        } else if (w.is_object() && w.contains("uniform")) {
            if (!j.contains("seed")) throw ParseError("generated workloads need a \"seed\"", 0);
            const auto len = w.at("uniform").get<std::size_t>();
            std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32), 0x776bu};
            std::mt19937_64 rng(seq);
            std::uniform_int_distribution<std::size_t> pick(0, cfg.code.k() - 1);
            for (std::size_t i = 0; i < len; ++i) cfg.workload.push_back(pick(rng));
        } else {
            throw ParseError("workload must be an index list or {\"uniform\": length}", 0);
        }

        if (j.contains("latency")) {
            const Json& lat = j.at("latency");
            const std::string model = lat.value("model", std::string("deterministic"));
            if (model == "deterministic") {
                cfg.latency.kind = LatencyKind::deterministic;
            } else if (model == "exponential") {
                cfg.latency.kind = LatencyKind::exponential;
                if (!j.contains("seed")) throw ParseError("exponential latency needs a \"seed\"", 0);
            } else {
                throw ParseError("latency model must be \"deterministic\" or \"exponential\"", 0);
            }
            if (lat.contains("per_server")) {
                cfg.latency.per_server = lat.at("per_server").get<std::vector<double>>();
                if (cfg.latency.per_server.size() != cfg.code.n()) {
                    throw ParseError("\"per_server\" needs one value per server", 0);
                }
            } else {
                cfg.latency.per_server = {lat.value("value", 1.0)};
            }
            for (double v : cfg.latency.per_server) {
                if (!(v > 0)) throw ParseError("latency parameters must be positive", 0);
            }
        }
        const std::string policy = j.value("policy", std::string("smallest"));
        if (policy == "smallest") {
            cfg.policy = SimPolicy::smallest;
        } else if (policy == "robust") {
            cfg.policy = SimPolicy::robust;
        } else {
            throw ParseError("policy must be \"smallest\" or \"robust\"", 0);
        }
        if (j.contains("max_set_size")) cfg.limits.max_set_size = j.at("max_set_size").get<std::size_t>();
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad simulation config: ") + e.what(), 0);
    }
    return cfg;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct InFlight {
    std::size_t id;
    std::size_t symbol;
    BitVec servers;
    double admitted;
    double finish;
    std::size_t attempt;
};

class Simulation {
public:
    explicit Simulation(const SimConfig& cfg) : cfg_(cfg), catalog_(cfg.code, cfg.limits) {}

    RetrievalTrace run() {
        for (std::size_t s : cfg_.workload) {
            if (s >= cfg_.code.k()) throw std::invalid_argument("workload index out of range");
        }
        for (std::size_t s = 0; s < cfg_.code.k(); ++s) {
            if (catalog_.sets(s).empty()) throw std::invalid_argument("symbol without a recovery set under the size cap");
        }
        warn_if_not_batch();
        trace_.stats.requests = cfg_.workload.size();
        trace_.stats.completion_times.assign(cfg_.workload.size(), 0.0);
        for (std::size_t i = 0; i < cfg_.workload.size(); ++i) pending_.push_back(i);

        admit_batch(true);
        while (!flight_.empty()) {
            double next = kInf;
            for (const auto& q : flight_) next = std::min(next, q.finish);
            advance(next);
            complete_at(next);
            if (cfg_.mode == SimMode::sync) {
                if (flight_.empty()) admit_batch(false);
            } else {
                admit_async();
            }
        }
        finish_stats();
        return std::move(trace_);
    }

private:
    void warn_if_not_batch() {
        if (multiset_count(cfg_.code.k(), cfg_.t) > 1e5) {
            trace_.warnings.push_back("batch property not checked: query space too large");
            return;
        }
        const BatchResult b = is_batch_code(catalog_, cfg_.t, cfg_.limits);
        if (b.verdict == Verdict::fails) {
            trace_.warnings.push_back("code is not a batch code for t = " + std::to_string(cfg_.t));
        } else if (b.verdict == Verdict::budget_exceeded) {
            trace_.warnings.push_back("batch property check exceeded its budget");
        }
    }

    double sample(std::size_t query, std::size_t server, std::size_t attempt) const {
        const double p = cfg_.latency.parameter(server);
        if (cfg_.latency.kind == LatencyKind::deterministic) return p;
        std::seed_seq seq{static_cast<std::uint32_t>(cfg_.seed), static_cast<std::uint32_t>(cfg_.seed >> 32),
                          static_cast<std::uint32_t>(query), static_cast<std::uint32_t>(server),
                          static_cast<std::uint32_t>(attempt)};
        std::mt19937_64 rng(seq);
        std::exponential_distribution<double> dist(1.0 / p);
        return dist(rng);
    }

    double duration(std::size_t query, const BitVec& servers, std::size_t attempt) const {
        double d = 0;
        for (std::size_t s = servers.first(); s < servers.size(); s = servers.next(s)) {
            d = std::max(d, sample(query, s, attempt));
        }
        return d;
    }

    BitVec busy() const {
        BitVec b(cfg_.code.n());
        for (const auto& q : flight_) b |= q.servers;
        return b;
    }

    void emit(const char* kind, std::size_t query, std::size_t symbol, const BitVec* servers) {
        TraceEvent ev;
        ev.time = now_;
        ev.kind = kind;
        ev.query = query;
        ev.symbol = symbol;
        if (servers) ev.servers = servers->indices();
        trace_.events.push_back(std::move(ev));
    }

    void start(std::size_t id, const BitVec& servers) {
        if (servers.intersects(busy())) throw std::logic_error("scheduler picked a busy server");
        const std::size_t symbol = cfg_.workload[id];
        flight_.push_back({id, symbol, servers, now_, now_ + duration(id, servers, 0), 0});
        emit("admit", id, symbol, &servers);
    }

    /// Admits up to t pending requests jointly (first batch, and every sync round).
    void admit_batch(bool first) {
        if (pending_.empty()) return;
        std::size_t take = std::min(cfg_.t, pending_.size());
        while (take > 0) {
            std::vector<std::size_t> targets;
            for (std::size_t i = 0; i < take; ++i) targets.push_back(cfg_.workload[pending_[i]]);
            const auto plan = find_disjoint_assignment(catalog_, targets, BitVec(cfg_.code.n()), nullptr,
                                                       cfg_.limits.node_budget);
            if (plan) {
                for (std::size_t i = 0; i < take; ++i) {
                    start(pending_.front(), plan->sets[i].coords);
                    pending_.pop_front();
                }
                return;
            }
            if (first) throw std::runtime_error("the first batch has no disjoint recovery sets");
            if (take == std::min(cfg_.t, pending_.size())) {
                emit("stall", pending_[take - 1], cfg_.workload[pending_[take - 1]], nullptr);
                ++trace_.stats.stalls;
            }
            --take;
        }
    }

    void admit_async() {
        while (flight_.size() < cfg_.t && !pending_.empty()) {
            const std::size_t id = pending_.front();
            const std::size_t symbol = cfg_.workload[id];
            if (const RecoverySet* s = pick(symbol)) {
                pending_.pop_front();
                start(id, s->coords);
                continue;
            }
            if (cfg_.relaxed && replan_with(id)) {
                pending_.pop_front();
                continue;
            }
            emit("stall", id, symbol, nullptr);
            ++trace_.stats.stalls;
            return;
        }
    }

    const RecoverySet* pick(std::size_t symbol) const {
        const BitVec blocked = busy();
        const RecoverySet* first = catalog_.first_avoiding(symbol, blocked);
        if (!first || cfg_.policy == SimPolicy::smallest) return first;
        std::vector<BitVec> state;
        for (const auto& q : flight_) state.push_back(q.servers);
        state.emplace_back();
        for (const RecoverySet& s : catalog_.sets(symbol)) {
            if (s.coords.intersects(blocked)) continue;
            state.back() = s.coords;
            if (robust(state)) return &s;
        }
        return first;
    }

    /// Whichever query finishes first, every symbol still has a free set.
    bool robust(const std::vector<BitVec>& state) const {
        for (std::size_t done = 0; done < state.size(); ++done) {
            BitVec blocked(cfg_.code.n());
            for (std::size_t i = 0; i < state.size(); ++i) {
                if (i != done) blocked |= state[i];
            }
            for (std::size_t l = 0; l < cfg_.code.k(); ++l) {
                if (!catalog_.first_avoiding(l, blocked)) return false;
            }
        }
        return true;
    }

    /// Re-chooses the in-flight sets together with the newcomer; re-planned
    /// queries restart their reads.
    bool replan_with(std::size_t id) {
        std::vector<std::size_t> targets;
        for (const auto& q : flight_) targets.push_back(q.symbol);
        targets.push_back(cfg_.workload[id]);
        const auto plan = find_disjoint_assignment(catalog_, targets, BitVec(cfg_.code.n()), nullptr,
                                                   cfg_.limits.node_budget);
        if (!plan) return false;
        for (std::size_t i = 0; i < flight_.size(); ++i) {
            auto& q = flight_[i];
            if (plan->sets[i].coords == q.servers) continue;
            q.servers = plan->sets[i].coords;
            ++q.attempt;
            q.finish = now_ + duration(q.id, q.servers, q.attempt);
            emit("replan", q.id, q.symbol, &q.servers);
            ++trace_.stats.replans;
        }
        start(id, plan->sets.back().coords);
        return true;
    }

    void advance(double to) {
        occupancy_area_ += static_cast<double>(flight_.size()) * (to - now_);
        now_ = to;
    }

    void complete_at(double time) {
        std::vector<InFlight> done;
        std::vector<InFlight> rest;
        for (auto& q : flight_) (q.finish == time ? done : rest).push_back(std::move(q));
        std::sort(done.begin(), done.end(), [](const InFlight& a, const InFlight& b) { return a.id < b.id; });
        flight_ = std::move(rest);
        for (const auto& q : done) {
            emit("complete", q.id, q.symbol, &q.servers);
            trace_.stats.completion_times[q.id] = time;
            response_sum_ += time - q.admitted;
        }
    }

    void finish_stats() {
        SimStats& s = trace_.stats;
        s.makespan = now_;
        if (s.requests > 0) s.mean_response = response_sum_ / static_cast<double>(s.requests);
        s.mean_occupancy = now_ > 0 ? occupancy_area_ / now_ : 0.0;
    }

    const SimConfig& cfg_;
    RecoveryCatalog catalog_;
    RetrievalTrace trace_;
    std::deque<std::size_t> pending_;
    std::vector<InFlight> flight_;
    double now_ = 0;
    double occupancy_area_ = 0;
    double response_sum_ = 0;
};

}  // namespace

RetrievalTrace simulate(const SimConfig& cfg) {
    if (cfg.t == 0) throw std::invalid_argument("t must be positive");
    if (cfg.latency.per_server.size() > 1 && cfg.latency.per_server.size() != cfg.code.n()) {
        throw std::invalid_argument("latency model needs one value per server");
    }
    return Simulation(cfg).run();
}

std::string trace_to_jsonl(const RetrievalTrace& trace) {
    std::string out;
    for (const TraceEvent& ev : trace.events) {
        Json servers = Json::array();
        for (std::size_t s : ev.servers) servers.push_back(s + 1);
        const Json line{{"time", ev.time},
                        {"event", ev.kind},
                        {"query", ev.query + 1},
                        {"symbol", ev.symbol + 1},
                        {"servers", servers}};
        out += line.dump() + "\n";
    }
    return out;
}

Json stats_to_json(const SimStats& s) {
    return {{"requests", s.requests},         {"makespan", s.makespan}, {"mean_response", s.mean_response},
            {"mean_occupancy", s.mean_occupancy}, {"stalls", s.stalls},     {"replans", s.replans}};
}

AuditReport audit_trace(const std::string& jsonl, const GeneratorMatrix& code, std::size_t t) {
    AuditReport report;
    std::map<std::size_t, std::vector<std::size_t>> running;  // query -> servers
    std::istringstream in(jsonl);
    std::string line;
    std::size_t line_no = 0;
    double last_time = -kInf;
    auto fail = [&](std::size_t& counter, const std::string& msg) {
        ++counter;
        if (report.messages.size() < 20) report.messages.push_back("line " + std::to_string(line_no) + ": " + msg);
    };
    auto decodes = [&](std::size_t symbol, const std::vector<std::size_t>& servers) {
        std::vector<int> acc(code.k(), 0);
        for (std::size_t s : servers) {
            for (std::size_t row = 0; row < code.k(); ++row) acc[row] ^= code.at(row, s) ? 1 : 0;
        }
        for (std::size_t row = 0; row < code.k(); ++row) {
            if (acc[row] != (row == symbol ? 1 : 0)) return false;
        }
        return true;
    };
    auto check_disjoint = [&](std::size_t query) {
        const auto& servers = running[query];
        for (const auto& [other, used] : running) {
            if (other == query) continue;
            for (std::size_t s : servers) {
                if (std::find(used.begin(), used.end(), s) != used.end()) {
                    fail(report.disjointness_violations, "server " + std::to_string(s + 1) + " shared by queries " +
                                                             std::to_string(query + 1) + " and " +
                                                             std::to_string(other + 1));
                }
            }
        }
    };
    // replans issued at one instant form a single atomic re-assignment
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> replans;
    auto flush_replans = [&]() {
        for (const auto& [q, servers] : replans) running[q] = servers;
        for (const auto& [q, servers] : replans) check_disjoint(q);
        replans.clear();
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        ++report.events;
        Json ev;
        std::size_t query = 0, symbol = 0;
        std::string kind;
        std::vector<std::size_t> servers;
        double time = 0;
        try {
            ev = Json::parse(line);
            time = ev.at("time").get<double>();
            kind = ev.at("event").get<std::string>();
            query = ev.at("query").get<std::size_t>() - 1;
            symbol = ev.at("symbol").get<std::size_t>() - 1;
            for (const auto& s : ev.at("servers")) servers.push_back(s.get<std::size_t>() - 1);
        } catch (const std::exception& e) {
            fail(report.format_errors, std::string("unreadable event: ") + e.what());
            continue;
        }
        if (time < last_time) fail(report.format_errors, "time goes backwards");
        if (kind != "replan" || time != last_time) flush_replans();
        last_time = time;
        if (kind == "admit" || kind == "replan") {
            std::vector<std::size_t> sorted = servers;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
                fail(report.disjointness_violations, "query reads a server twice");
            }
            if (!sorted.empty() && sorted.back() >= code.n()) {
                fail(report.format_errors, "server index out of range");
                continue;
            }
            if (symbol >= code.k() || !decodes(symbol, servers)) {
                fail(report.decoding_violations, "servers do not recover the requested symbol");
            }
            if (kind == "admit" && running.count(query)) fail(report.format_errors, "query admitted twice");
            if (kind == "replan" && !running.count(query)) fail(report.format_errors, "replan of an idle query");
            if (kind == "replan") {
                replans.emplace_back(query, servers);
                continue;
            }
            running[query] = servers;
            check_disjoint(query);
            if (running.size() > t) fail(report.budget_violations, "more than t queries in flight");
        } else if (kind == "complete") {
            if (!running.erase(query)) fail(report.format_errors, "completion of an idle query");
        } else if (kind != "stall") {
            fail(report.format_errors, "unknown event kind \"" + kind + "\"");
        }
    }
    flush_replans();
    if (!running.empty()) fail(report.format_errors, std::to_string(running.size()) + " queries never complete");
    return report;
}

}  // namespace abatch
