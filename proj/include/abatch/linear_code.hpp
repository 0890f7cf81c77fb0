#pragma once

#include <abatch/bitvec.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace abatch {

/// Raised when an exhaustive search would exceed its configured node budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/**
 * k x n binary generator matrix of a linear code, y = x * G.
 *
 * Construction validates the shape (k rows of equal length n, k <= n) and
 * that the rows are linearly independent over GF(2).
 */
class GeneratorMatrix {
public:
    explicit GeneratorMatrix(std::vector<BitVec> rows);

    static GeneratorMatrix identity(std::size_t k);
    /// Parses rows given as '0'/'1' strings.
    static GeneratorMatrix from_strings(std::span<const std::string> rows);

    std::size_t k() const { return rows_.size(); }
    std::size_t n() const { return n_; }
    std::size_t redundancy() const { return n_ - rows_.size(); }

    const std::vector<BitVec>& rows() const { return rows_; }
    /// Column j as a length-k vector.
    const BitVec& column(std::size_t j) const { return columns_[j]; }
    bool at(std::size_t row, std::size_t col) const { return rows_[row].test(col); }

    /// True when the leftmost k x k block is the identity.
    bool systematic() const { return systematic_; }
    /// Largest Hamming weight over all columns.
    std::size_t max_column_weight() const;

    bool operator==(const GeneratorMatrix& other) const { return rows_ == other.rows_; }

private:
    std::size_t n_ = 0;
    std::vector<BitVec> rows_;
    std::vector<BitVec> columns_;
    bool systematic_ = false;
};

BitVec encode(const BitVec& x, const GeneratorMatrix& g);

/// A set of codeword coordinates whose GF(2) sum reconstructs x_target.
struct RecoverySet {
    std::size_t target = 0;
    BitVec coords;

    std::size_t size() const { return coords.count(); }
    bool operator==(const RecoverySet&) const = default;
};

/// Requested information-symbol indices; a multiset, kept sorted by the
/// enumerators but accepted in any order.
struct Query {
    std::vector<std::size_t> indices;

    std::size_t t() const { return indices.size(); }
    bool operator==(const Query&) const = default;
};

/// One recovery set per query position, pairwise disjoint.
struct RecoveryAssignment {
    std::vector<RecoverySet> sets;
};

/// True when coords sum to e_target and no proper subset does.
bool is_minimal_recovery_set(const GeneratorMatrix& g, const RecoverySet& set);

/**
 * All minimal recovery sets for x_target with at most max_size coordinates
 * (0 means no limit), sorted by size and then lexicographically.
 *
 * Throws BudgetExceeded when the search visits more than node_budget nodes.
 */
std::vector<RecoverySet> enumerate_recovery_sets(const GeneratorMatrix& g, std::size_t target,
                                                 std::size_t max_size = 0,
                                                 std::uint64_t node_budget = kDefaultNodeBudget);

struct SearchLimits {
    /// Upper bound on recovery-set size; 0 means n (unbounded).
    std::size_t max_set_size = 0;
    /// Per-search node cap for enumeration and assignment backtracking.
    std::uint64_t node_budget = kDefaultNodeBudget;
    /// Largest query multiset space the verifiers will walk.
    std::uint64_t query_budget = 10'000'000;
};

/// Minimal recovery sets of every information symbol, precomputed once.
class RecoveryCatalog {
public:
    RecoveryCatalog(const GeneratorMatrix& g, const SearchLimits& limits = {});

    const GeneratorMatrix& code() const { return code_; }
    std::size_t k() const { return sets_.size(); }
    std::size_t n() const { return code_.n(); }
    const std::vector<RecoverySet>& sets(std::size_t target) const { return sets_[target]; }
    std::size_t max_set_size() const { return max_set_size_; }

    /// First set for target disjoint from blocked, in catalog order.
    const RecoverySet* first_avoiding(std::size_t target, const BitVec& blocked) const;

private:
    GeneratorMatrix code_;
    std::size_t max_set_size_;
    std::vector<std::vector<RecoverySet>> sets_;
};

/**
 * Backtracking search for pairwise disjoint recovery sets, one per target,
 * all avoiding blocked. Sets are tried smallest first; the result is
 * deterministic. nodes (optional) accumulates the number of search nodes.
 */
std::optional<RecoveryAssignment> find_disjoint_assignment(const RecoveryCatalog& catalog,
                                                           std::span<const std::size_t> targets,
                                                           const BitVec& blocked,
                                                           std::uint64_t* nodes = nullptr,
                                                           std::uint64_t node_budget = kDefaultNodeBudget);

std::optional<RecoveryAssignment> find_disjoint_assignment(const GeneratorMatrix& g, const Query& q,
                                                           const SearchLimits& limits = {});

enum class Verdict { holds, fails, budget_exceeded };

std::string to_string(Verdict v);

struct CostInfo {
    double query_space = 0;
    std::uint64_t queries_checked = 0;
    std::uint64_t nodes = 0;
    bool over_budget = false;
    std::size_t max_set_size = 0;
};

struct BatchResult {
    Verdict verdict = Verdict::holds;
    std::optional<Query> counterexample;
    CostInfo cost;

    bool holds() const { return verdict == Verdict::holds; }
};

struct PirResult {
    Verdict verdict = Verdict::holds;
    std::optional<std::size_t> counterexample;
    CostInfo cost;

    bool holds() const { return verdict == Verdict::holds; }
};

/**
 * How the sets of the t-1 queries still in flight are treated when one
 * query completes and a newcomer arrives.
 *
 *  strict    every legal query, every valid initial assignment: the newcomer
 *            must fit beside the unchanged remaining sets.
 *  scheduled every legal query has at least one initial assignment that is
 *            strict-robust (a scheduler may pick it).
 *  relaxed   the remaining sets may be re-chosen jointly with the newcomer.
 */
enum class AsyncMode { strict, scheduled, relaxed };

std::string to_string(AsyncMode m);
AsyncMode parse_async_mode(const std::string& s);

struct AsyncWitness {
    Query query;
    RecoveryAssignment assignment;
    std::size_t completed_position = 0;
    std::size_t newcomer = 0;
};

struct AsyncResult {
    Verdict verdict = Verdict::holds;
    AsyncMode mode = AsyncMode::strict;
    std::optional<AsyncWitness> witness;
    /// Set when the code is not even a batch code for t.
    std::optional<Query> batch_counterexample;
    CostInfo cost;

    bool holds() const { return verdict == Verdict::holds; }
};

/// Number of size-t multisets over [k], as a double.
double multiset_count(std::size_t k, std::size_t t);

/// Calls visit(query) for each size-t multiset over [k] in lexicographic
/// order; stops early when visit returns false.
template <typename Visit>
void for_each_multiset(std::size_t k, std::size_t t, Visit&& visit) {
    if (k == 0) return;
    std::vector<std::size_t> idx(t, 0);
    while (true) {
        if (!visit(static_cast<const std::vector<std::size_t>&>(idx))) return;
        std::size_t pos = t;
        while (pos > 0 && idx[pos - 1] == k - 1) --pos;
        if (pos == 0) return;
        const std::size_t v = idx[pos - 1] + 1;
        for (std::size_t i = pos - 1; i < t; ++i) idx[i] = v;
    }
}

BatchResult is_batch_code(const GeneratorMatrix& g, std::size_t t, const SearchLimits& limits = {});
BatchResult is_batch_code(const RecoveryCatalog& catalog, std::size_t t, const SearchLimits& limits = {});

PirResult is_pir_code(const GeneratorMatrix& g, std::size_t t, const SearchLimits& limits = {});
PirResult is_pir_code(const RecoveryCatalog& catalog, std::size_t t, const SearchLimits& limits = {});

AsyncResult is_asynchronous_batch_code(const GeneratorMatrix& g, std::size_t t,
                                       AsyncMode mode = AsyncMode::strict,
                                       const SearchLimits& limits = {});
AsyncResult is_asynchronous_batch_code(const RecoveryCatalog& catalog, std::size_t t,
                                       AsyncMode mode = AsyncMode::strict,
                                       const SearchLimits& limits = {});

}  // namespace abatch
