#pragma once

#include <abatch/graphcore.hpp>
#include <abatch/linear_code.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abatch {

/// Summary of a constructed code.
struct CodeReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t t = 0;
    std::size_t rho = 0;
    std::string family;
    /// "theorem1", "direct-verifier", "both" or "none"
    std::string certified_by = "none";
    /// Girth of the code's bipartite graph (nullopt when acyclic).
    std::optional<std::size_t> girth;
    /// Berge girth of the underlying hypergraph, for hypergraph families.
    std::optional<std::size_t> berge_girth;
};

struct GraphCode {
    BipartiteGraph graph;
    GeneratorMatrix code;
    CodeReport report;
};

/// Systematic code of a bipartite graph plus a report; certified_by is
/// "theorem1" when a batch certificate for t exists.
GraphCode make_graph_code(BipartiteGraph graph, std::size_t t, CertifyTarget target, std::string family);

/**
 * Subdivides K_{m,m}: one information vertex per edge (p, q), joined to the
 * parity vertices p and q. Information vertex a*m+b sits on edge (a, b);
 * parity vertices 0..m-1 and m..2m-1 are the two sides. k = m^2, rho = 2m.
 */
GraphCode construct_t3_optimal(std::size_t m);

struct PackingDesign {
    std::size_t eta = 0;
    std::size_t r = 0;
    /// Sorted 0-based blocks.
    std::vector<std::vector<std::size_t>> blocks;

    /// Every pair of points lies in at most one block.
    bool valid() const;
    Hypergraph hypergraph() const;
};

enum class PackingOrder { lexicographic, seeded_random };

struct PackingOptions {
    PackingOrder order = PackingOrder::lexicographic;
    std::uint64_t seed = 1;
    /// Random orders tried; the best result is kept. Stops early at the Johnson bound.
    std::size_t restarts = 1;
};

/// Greedy maximal 2-(eta, r, 1) packing; candidate r-subsets are scanned in the given order.
PackingDesign greedy_packing(std::size_t eta, std::size_t r, const PackingOptions& options = {});

/// floor((eta / r) * floor((eta - 1) / (r - 1))).
std::size_t johnson_bound(std::size_t eta, std::size_t r);

/// Blocks as information symbols, points as parities; t = r + 1.
GraphCode pir_code_from_packing(const PackingDesign& design);

/// True when no x < y < z in values satisfy x + z = 2y.
bool is_3ap_free(const std::vector<std::size_t>& values);

/**
 * Large 3AP-free subset of [1..nmax]. For nmax <= 30 the lexicographically
 * first maximum set; above that the best digit-sphere set over d in 2..10.
 */
std::vector<std::size_t> behrend_set(std::size_t nmax);

struct EfrHypergraph {
    std::size_t m = 0;
    std::size_t r = 0;
    std::vector<std::size_t> slopes;
    /// Vertex (x, j), x in [1..m], j in [1..r], has 0-based index (j-1)*m + x - 1.
    Hypergraph hypergraph;
    bool repaired = false;
    std::optional<std::size_t> berge_girth;
};

/**
 * Grid lines {(x + (j-1)a, j)} for start x and slope a in slopes. Throws
 * std::invalid_argument unless r >= 3 and slopes is a 3AP-free subset of
 * [1..m]. Short Berge cycles, if any, are removed with rewire (kappa = 3).
 */
EfrHypergraph efr_hypergraph(std::size_t m, std::size_t r, const std::vector<std::size_t>& slopes);

/// Number of grid lines for the given slopes.
std::size_t efr_edge_count(std::size_t m, std::size_t r, const std::vector<std::size_t>& slopes);

/// The behrend_set(n') with n' <= (m-1)/(r-1) that gives the most lines.
std::vector<std::size_t> efr_slopes(std::size_t m, std::size_t r);

/// Code of an EFR hypergraph: lines as information symbols, grid points as parities, t = r + 1.
GraphCode efr_code(const EfrHypergraph& h);

/// The [7,3] simplex generator.
GeneratorMatrix simplex_counterexample();

/// The systematic [8,4] code whose asynchronous behaviour is studied for t = 3.
GeneratorMatrix example1_code();

}  // namespace abatch
