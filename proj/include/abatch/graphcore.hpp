#pragma once

#include <abatch/linear_code.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace abatch {

/// Simple undirected graph on vertices 0..size()-1.
class Graph {
public:
    explicit Graph(std::size_t vertices = 0) : adj_(vertices) {}

    void add_edge(std::size_t u, std::size_t v);
    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }

private:
    std::vector<std::vector<std::size_t>> adj_;
    std::size_t edges_ = 0;
};

/**
 * Bipartite graph with left part A (size a) and right part B (size b).
 * adjacency[u] lists the right neighbours of left vertex u, sorted and
 * without repeats.
 */
class BipartiteGraph {
public:
    BipartiteGraph(std::size_t a, std::size_t b, std::vector<std::vector<std::size_t>> adjacency);

    std::size_t a_size() const { return a_; }
    std::size_t b_size() const { return b_; }
    const std::vector<std::vector<std::size_t>>& adjacency() const { return adj_; }
    const std::vector<std::size_t>& neighbors(std::size_t left) const { return adj_[left]; }
    std::size_t edge_count() const;
    std::size_t left_degree(std::size_t left) const { return adj_[left].size(); }
    std::size_t min_left_degree() const;

    /// Left vertices 0..a-1, right vertices a..a+b-1.
    Graph as_graph() const;
    /// Keeps the right vertices flagged in keep (and all of A).
    BipartiteGraph induced_on_right(const std::vector<bool>& keep) const;

    bool operator==(const BipartiteGraph&) const = default;

private:
    std::size_t a_;
    std::size_t b_;
    std::vector<std::vector<std::size_t>> adj_;
};

/// (Multi)hypergraph on vertices 0..v_size-1; repeated edges are allowed.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(std::size_t v_size, std::vector<std::vector<std::size_t>> edges);

    std::size_t v_size() const { return v_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }
    const std::vector<std::size_t>& edge(std::size_t i) const { return edges_[i]; }

    /// Common edge size, or nullopt when empty or mixed.
    std::optional<std::size_t> uniform_r() const;
    std::size_t degree(std::size_t v) const;

    bool operator==(const Hypergraph&) const = default;

private:
    std::size_t v_ = 0;
    std::vector<std::vector<std::size_t>> edges_;
};

/// Alternating edge/vertex sequence: vertices[i] lies in edges[i] and edges[i+1] (cyclically).
struct BergeCycle {
    std::vector<std::size_t> edges;
    std::vector<std::size_t> vertices;
};

/// Length of the shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);
std::optional<std::size_t> girth(const BipartiteGraph& g);

/// Vertices of one shortest cycle in order (empty for forests).
std::vector<std::size_t> shortest_cycle(const Graph& g);

BipartiteGraph incidence_graph(const Hypergraph& h);
Hypergraph hypergraph_from_bipartite(const BipartiteGraph& g);

std::optional<std::size_t> berge_girth(const Hypergraph& h);
/// A shortest Berge cycle, if any.
std::optional<BergeCycle> shortest_berge_cycle(const Hypergraph& h);
/// Checks the cyclic membership invariant and distinctness.
bool is_berge_cycle(const Hypergraph& h, const BergeCycle& c);

bool is_berge_connected(const Hypergraph& h);

enum class CycleClass { tree, unicyclic, multicyclic };
std::string to_string(CycleClass c);

struct Lemma4Classification {
    CycleClass kind;
    /// sum over edges of (|e| - 1), minus (|V| - 1)
    long long checksum;
    /// independent cycles of the incidence graph, counted by a spanning forest walk
    std::size_t cycle_rank;
};

/// Requires a Berge-connected hypergraph with at least two vertices.
Lemma4Classification lemma4_classify(const Hypergraph& h);

struct ConditionResult {
    bool holds = true;
    /// kappa edge indices spanning too few vertices, when !holds
    std::vector<std::size_t> violating_edges;
    std::uint64_t subsets_checked = 0;
};

/**
 * (kappa*r - kappa, kappa)-condition: every kappa edges of the r-uniform
 * hypergraph span at least kappa*(r-1)+1 vertices. Throws
 * std::invalid_argument for non-uniform input and BudgetExceeded when
 * C(|E|, kappa) exceeds subset_budget.
 */
ConditionResult satisfies_condition(const Hypergraph& h, std::size_t kappa,
                                    std::uint64_t subset_budget = kDefaultNodeBudget);

/// Whenever berge_girth(h) >= kappa+1, reports satisfies_condition(h, kappa); true otherwise.
bool check_girth_implies_condition(const Hypergraph& h, std::size_t kappa);

struct RewireStep {
    std::size_t edge;
    std::size_t removed_vertex;
    std::size_t added_vertex;
};

struct RewireResult {
    Hypergraph hypergraph;
    std::vector<RewireStep> steps;
};

/**
 * Breaks every Berge cycle with at most kappa edges while keeping the edge
 * count and the (kappa*r - kappa, kappa)-condition. Each step removes a
 * cycle vertex v from a cycle edge e and inserts a vertex from outside the
 * Berge component of the cycle into e (isolated vertices first, then the
 * lowest index that keeps the condition).
 *
 * Throws std::invalid_argument when the condition fails on input and
 * std::runtime_error when no outside vertex is available.
 */
RewireResult rewire(const Hypergraph& h, std::size_t kappa);

/// Systematic [I | A] with A the a x b biadjacency matrix.
GeneratorMatrix code_from_bipartite(const BipartiteGraph& g);

enum class CertifyTarget { batch, pir };
enum class CertifyStatus { certified, none, unknown };
std::string to_string(CertifyStatus s);

struct Theorem1Certificate {
    CertifyStatus status = CertifyStatus::none;
    /// Kept right vertices (sorted) when certified.
    std::vector<std::size_t> right_subset;
    std::optional<std::size_t> girth;
    std::size_t min_left_degree = 0;
    std::string strategy;
    std::uint64_t evaluations = 0;
};

struct CertifyOptions {
    /// Largest |B| for the exhaustive subset pass.
    std::size_t exhaustive_max_right = 20;
    std::uint64_t evaluation_budget = 2'000'000;
};

/**
 * Looks for B' of B such that the subgraph keeping B' has every left degree
 * at least t-1 and girth >= 8 (batch) or >= 6 (pir). Tries B itself, then
 * greedy removal of right vertices on short cycles, then an exhaustive pass
 * for small B. A "none" answer does not show that the code lacks the
 * property; it only means no certificate of this form was found.
 */
Theorem1Certificate theorem1_certify(const BipartiteGraph& g, std::size_t t, CertifyTarget target,
                                     const CertifyOptions& options = {});

}  // namespace abatch
