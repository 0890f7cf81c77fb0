#pragma once

#include <abatch/constructions.hpp>
#include <abatch/extremal.hpp>
#include <abatch/graphcore.hpp>
#include <abatch/linear_code.hpp>

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abatch {

using Json = nlohmann::json;

/// Malformed input; line is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// k lines of '0'/'1'; blank lines and lines starting with '#' are skipped.
GeneratorMatrix parse_matrix_text(const std::string& text);
std::string matrix_to_text(const GeneratorMatrix& g);

/// {"k":..., "n":..., "rows":["0101...", ...]}
GeneratorMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const GeneratorMatrix& g);

/**
 * Accepts matrix text, matrix JSON, or any JSON object carrying the matrix
 * under "code" (as printed by the construct command).
 */
GeneratorMatrix read_matrix(const std::string& text);

/// First line "eta m [r]", then m lines of 1-based vertex indices.
Hypergraph parse_hypergraph_text(const std::string& text);
std::string hypergraph_to_text(const Hypergraph& h);

/// {"a":..., "b":..., "adj":[[...], ...]} with 1-based right indices.
BipartiteGraph bipartite_from_json(const Json& j);
Json bipartite_to_json(const BipartiteGraph& g);

/// Reads a bipartite graph from JSON (bare or under "graph").
BipartiteGraph read_bipartite(const std::string& text);

/// Information-symbol indices are 1-based in every JSON output.
Json query_to_json(const Query& q);
Json assignment_to_json(const RecoveryAssignment& a);
Json cost_to_json(const CostInfo& c);
Json batch_result_to_json(const BatchResult& r, std::size_t t);
Json pir_result_to_json(const PirResult& r, std::size_t t);
Json async_result_to_json(const AsyncResult& r, std::size_t t);
Json certificate_to_json(const Theorem1Certificate& c);
Json report_to_json(const CodeReport& r);
Json hypergraph_to_json(const Hypergraph& h);
/// {eta, r, kappa, B, F, exact, nodes} plus witnesses and the rewiring outcome.
Json extremal_to_json(const ExtremalResult& r);
Json search_to_json(const ExtremalSearch& s, std::size_t eta, std::size_t r, std::size_t kappa);
Json redundancy_row_to_json(const RedundancyRow& row);

}  // namespace abatch
