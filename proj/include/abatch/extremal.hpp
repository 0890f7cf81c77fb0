#pragma once

#include <abatch/graphcore.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abatch {

/// Outcome of one exact maximum-edge search.
struct ExtremalSearch {
    std::size_t value = 0;
    /// Lexicographically smallest optimal edge list found.
    Hypergraph witness;
    /// False when the node budget ran out; value is then only a lower bound.
    bool exact = true;
    std::uint64_t nodes = 0;
};

struct ExtremalLimits {
    std::uint64_t node_budget = 50'000'000;
};

/**
 * Largest number of edges of a simple r-graph on eta vertices with Berge
 * girth at least kappa + 1. Requires 2 <= r <= eta <= 64 and kappa >= 2.
 */
ExtremalSearch max_edges_berge_girth(std::size_t eta, std::size_t r, std::size_t kappa,
                                     const ExtremalLimits& limits = {});

/// Largest number of edges of a simple r-graph on eta vertices in which
/// every kappa edges span at least kappa*(r-1)+1 vertices.
ExtremalSearch max_edges_condition(std::size_t eta, std::size_t r, std::size_t kappa,
                                   const ExtremalLimits& limits = {});

struct ExtremalResult {
    std::size_t eta = 0;
    std::size_t r = 0;
    std::size_t kappa = 0;
    ExtremalSearch b;
    ExtremalSearch f;
    /// Rewired condition witness, when rewiring succeeded.
    std::optional<Hypergraph> rewired;
    bool rewire_ok = false;
    std::string rewire_note;

    bool exact() const { return b.exact && f.exact; }
    bool equal() const { return exact() && b.value == f.value; }
    std::uint64_t nodes() const { return b.nodes + f.nodes; }
};

/// Runs both searches and rewires the condition witness.
ExtremalResult verify_theorem5(std::size_t eta, std::size_t r, std::size_t kappa, const ExtremalLimits& limits = {});

struct RedundancyRow {
    std::size_t k = 0;
    std::size_t rho = 0;
    std::string construction;
    double lower_bound = 0;  // 2 sqrt(k)
    double rao_vardy = 0;    // sqrt(2k)
    double ratio = 0;        // rho / sqrt(k)
    bool tight = false;      // rho == 2 sqrt(k) exactly
};

/**
 * Best constructed redundancy for each k in [k_min, k_max]. For t = 3 the
 * subdivided K_{a,b} with the smallest a + b and ab >= k; for t >= 4 the
 * grid-line family with r = t - 1, one row per member whose k is in range.
 */
std::vector<RedundancyRow> redundancy_table(std::size_t t, std::size_t k_min, std::size_t k_max);

/// True when the ratio column never decreases.
bool ratio_nondecreasing(const std::vector<RedundancyRow>& rows);

}  // namespace abatch
