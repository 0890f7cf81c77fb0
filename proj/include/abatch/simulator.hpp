#pragma once

#include <abatch/linear_code.hpp>

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abatch {

enum class LatencyKind { deterministic, exponential };
enum class SimMode { sync, async };
/// How a newcomer's recovery set is chosen among the free ones.
enum class SimPolicy { smallest, robust };

std::string to_string(SimMode m);

struct LatencyModel {
    LatencyKind kind = LatencyKind::deterministic;
    /// Fixed response time (deterministic) or mean (exponential) per server;
    /// a single value applies to every server.
    std::vector<double> per_server{1.0};

    double parameter(std::size_t server) const;
};

struct SimConfig {
    GeneratorMatrix code = GeneratorMatrix::identity(1);
    std::size_t t = 1;
    /// 0-based information-symbol indices, served in order.
    std::vector<std::size_t> workload;
    LatencyModel latency;
    SimMode mode = SimMode::async;
    std::uint64_t seed = 0;
    /// Re-plan the sets of in-flight queries jointly with a blocked newcomer.
    bool relaxed = false;
    /// robust: prefer a set after which every completion leaves room for any
    /// newcomer; falls back to the smallest free set.
    SimPolicy policy = SimPolicy::smallest;
    SearchLimits limits;
};

/**
 * Reads a config object:
 *   code      matrix JSON, or "example1" / "simplex"
 *   t         in-flight query budget
 *   workload  1-based index list, or {"uniform": length}
 *   latency   {"model": "deterministic"|"exponential", "value": x | "per_server": [...]}
 *   mode      "sync" | "async"
 *   seed      integer (required for exponential latency and generated workloads)
 *   relaxed   bool
 *   policy    "smallest" | "robust"
 * Throws ParseError on malformed input.
 */
SimConfig sim_config_from_json(const nlohmann::json& j);

struct TraceEvent {
    double time = 0;
    /// "admit", "complete", "stall" or "replan"
    std::string kind;
    std::size_t query = 0;
    std::size_t symbol = 0;
    std::vector<std::size_t> servers;
};

struct SimStats {
    std::size_t requests = 0;
    double makespan = 0;
    double mean_response = 0;
    /// Time-averaged number of queries in flight.
    double mean_occupancy = 0;
    std::size_t stalls = 0;
    std::size_t replans = 0;
    std::vector<double> completion_times;
};

struct RetrievalTrace {
    std::vector<TraceEvent> events;
    SimStats stats;
    std::vector<std::string> warnings;
};

/// Runs the event loop; throws std::invalid_argument for bad workloads and
/// std::runtime_error when the first batch cannot be served.
RetrievalTrace simulate(const SimConfig& cfg);

/// One JSON object per line; indices are 1-based.
std::string trace_to_jsonl(const RetrievalTrace& trace);
nlohmann::json stats_to_json(const SimStats& s);

struct AuditReport {
    std::size_t events = 0;
    std::size_t disjointness_violations = 0;
    std::size_t budget_violations = 0;
    std::size_t decoding_violations = 0;
    std::size_t format_errors = 0;
    std::vector<std::string> messages;

    bool ok() const {
        return disjointness_violations == 0 && budget_violations == 0 && decoding_violations == 0 &&
               format_errors == 0;
    }
};

/**
 * Replays a JSONL trace: servers of concurrently running queries must be
 * disjoint, at most t queries may run at once, and every server set must
 * XOR to the requested symbol's unit vector under code.
 */
AuditReport audit_trace(const std::string& jsonl, const GeneratorMatrix& code, std::size_t t);

}  // namespace abatch
