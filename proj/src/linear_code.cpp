#include <abatch/linear_code.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

namespace abatch {

GeneratorMatrix::GeneratorMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("generator matrix needs at least one row");
    n_ = rows_.front().size();
    for (const BitVec& r : rows_) {
        if (r.size() != n_) throw std::invalid_argument("generator matrix rows differ in length");
    }
    if (rows_.size() > n_) throw std::invalid_argument("generator matrix has k > n");
    if (gf2_rank(rows_) != rows_.size()) {
        throw std::invalid_argument("generator matrix rows are linearly dependent over GF(2)");
    }

    columns_.assign(n_, BitVec(rows_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = rows_[i].first(); j < n_; j = rows_[i].next(j)) columns_[j].set(i);
    }
    systematic_ = true;
    for (std::size_t j = 0; j < rows_.size() && systematic_; ++j) {
        systematic_ = columns_[j] == BitVec::unit(rows_.size(), j);
    }
}

GeneratorMatrix GeneratorMatrix::identity(std::size_t k) {
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < k; ++i) rows.push_back(BitVec::unit(k, i));
    return GeneratorMatrix(std::move(rows));
}

GeneratorMatrix GeneratorMatrix::from_strings(std::span<const std::string> rows) {
    std::vector<BitVec> bits;
    bits.reserve(rows.size());
    for (const std::string& r : rows) bits.push_back(BitVec::from_string(r));
    return GeneratorMatrix(std::move(bits));
}

std::size_t GeneratorMatrix::max_column_weight() const {
    std::size_t w = 0;
    for (const BitVec& c : columns_) w = std::max(w, c.count());
    return w;
}

BitVec encode(const BitVec& x, const GeneratorMatrix& g) {
    if (x.size() != g.k()) {
        throw std::invalid_argument("information vector has length " + std::to_string(x.size()) +
                                    ", expected k = " + std::to_string(g.k()));
    }
    BitVec y(g.n());
    for (std::size_t i = x.first(); i < x.size(); i = x.next(i)) y ^= g.rows()[i];
    return y;
}

bool is_minimal_recovery_set(const GeneratorMatrix& g, const RecoverySet& set) {
    if (set.target >= g.k() || set.coords.size() != g.n() || set.coords.none()) return false;
    BitVec sum(g.k());
    std::vector<BitVec> cols;
    for (std::size_t j : set.coords.indices()) {
        sum ^= g.column(j);
        cols.push_back(g.column(j));
    }
    if (sum != BitVec::unit(g.k(), set.target)) return false;
    // a set summing to a nonzero vector is minimal exactly when it is independent
    return gf2_rank(cols) == cols.size();
}

namespace {

/**
 * Enumerates minimal recovery sets through an information set.
 *
 * Pick k independent columns (the information set I) and express every
 * column in that basis. A coordinate set S = P + U with P outside I and U
 * inside I sums to e_target iff U is the support of tau + sum(P), where tau
 * is e_target in the new basis. So the search walks subsets P of the
 * non-information columns, each fixing U, and keeps the independent ones.
 * Dependent P can never extend to an independent S, which prunes the walk.
 */
class RecoveryEnumerator {
public:
    RecoveryEnumerator(const GeneratorMatrix& g, std::size_t max_size, std::uint64_t budget)
        : g_(g), k_(g.k()), max_size_(max_size == 0 ? g.n() : max_size), budget_(budget) {
        Gf2Basis basis(k_);
        for (std::size_t j = 0; j < g.n() && info_.size() < k_; ++j) {
            if (basis.insert(g.column(j), j)) info_.push_back(j);
        }
        // coefficients of every column over the information columns
        Gf2Basis info_basis(k_);
        for (std::size_t b = 0; b < info_.size(); ++b) info_basis.insert(g.column(info_[b]), b);
        coeff_.assign(g.n(), BitVec(k_));
        std::vector<std::size_t> tags;
        std::vector<bool> is_info(g.n(), false);
        for (std::size_t b = 0; b < info_.size(); ++b) is_info[info_[b]] = true;
        for (std::size_t j = 0; j < g.n(); ++j) {
            info_basis.represent(g.column(j), tags);
            for (std::size_t b : tags) coeff_[j].set(b);
            if (!is_info[j]) rest_.push_back(j);
        }
    }

    std::vector<RecoverySet> run(std::size_t target) {
        target_ = target;
        out_.clear();
        nodes_ = 0;
        std::vector<std::size_t> tags;
        Gf2Basis info_basis(k_);
        for (std::size_t b = 0; b < info_.size(); ++b) info_basis.insert(g_.column(info_[b]), b);
        tau_ = BitVec(k_);
        info_basis.represent(BitVec::unit(k_, target), tags);
        for (std::size_t b : tags) tau_.set(b);

        std::vector<std::size_t> chosen;
        walk(0, chosen, tau_, Gf2Basis(k_));

        std::sort(out_.begin(), out_.end(), [](const RecoverySet& a, const RecoverySet& b) {
            const std::size_t sa = a.size();
            const std::size_t sb = b.size();
            if (sa != sb) return sa < sb;
            return a.coords.index_less(b.coords);
        });
        return out_;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    void walk(std::size_t from, std::vector<std::size_t>& chosen, const BitVec& residual, const Gf2Basis& basis) {
        if (++nodes_ > budget_) {
            throw BudgetExceeded("recovery-set enumeration exceeded " + std::to_string(budget_) + " nodes");
        }
        emit_if_valid(chosen, residual);
        if (chosen.size() >= max_size_) return;
        for (std::size_t i = from; i < rest_.size(); ++i) {
            const std::size_t col = rest_[i];
            Gf2Basis next = basis;
            if (!next.insert(coeff_[col], col)) continue;
            chosen.push_back(col);
            walk(i + 1, chosen, residual ^ coeff_[col], next);
            chosen.pop_back();
        }
    }

    void emit_if_valid(const std::vector<std::size_t>& chosen, const BitVec& residual) {
        const std::size_t total = chosen.size() + residual.count();
        if (total == 0 || total > max_size_) return;
        // Independent iff the chosen columns stay independent after
        // projecting away the information coordinates used by U.
        BitVec keep(k_);
        for (std::size_t b = 0; b < k_; ++b) keep.set(b, !residual.test(b));
        Gf2Basis proj(k_);
        for (std::size_t col : chosen) {
            if (!proj.insert(coeff_[col] & keep, col)) return;
        }
        RecoverySet rs{target_, BitVec(g_.n())};
        for (std::size_t col : chosen) rs.coords.set(col);
        for (std::size_t b = residual.first(); b < k_; b = residual.next(b)) rs.coords.set(info_[b]);
        out_.push_back(std::move(rs));
    }

    const GeneratorMatrix& g_;
    std::size_t k_;
    std::size_t max_size_;
    std::uint64_t budget_;
    std::vector<std::size_t> info_;
    std::vector<std::size_t> rest_;
    std::vector<BitVec> coeff_;
    std::size_t target_ = 0;
    BitVec tau_;
    std::uint64_t nodes_ = 0;
    std::vector<RecoverySet> out_;
};

/**
 * Same walk for k <= 64 with coefficient vectors packed into one word. The
 * subsets P do not depend on the target, so one walk serves all targets.
 */
class WordEnumerator {
public:
    WordEnumerator(const GeneratorMatrix& g, std::size_t max_size, std::uint64_t budget)
        : g_(g), k_(g.k()), max_size_(max_size == 0 ? g.n() : max_size), budget_(budget) {
        Gf2Basis basis(k_);
        for (std::size_t j = 0; j < g.n() && info_.size() < k_; ++j) {
            if (basis.insert(g.column(j), j)) info_.push_back(j);
        }
        Gf2Basis info_basis(k_);
        for (std::size_t b = 0; b < info_.size(); ++b) info_basis.insert(g.column(info_[b]), b);
        std::vector<bool> is_info(g.n(), false);
        for (std::size_t b = 0; b < info_.size(); ++b) is_info[info_[b]] = true;
        std::vector<std::size_t> tags;
        coeff_.assign(g.n(), 0);
        for (std::size_t j = 0; j < g.n(); ++j) {
            info_basis.represent(g.column(j), tags);
            for (std::size_t b : tags) coeff_[j] |= std::uint64_t{1} << b;
            if (!is_info[j]) rest_.push_back(j);
        }
        for (std::size_t i = 0; i < k_; ++i) {
            info_basis.represent(BitVec::unit(k_, i), tags);
            std::uint64_t tau = 0;
            for (std::size_t b : tags) tau |= std::uint64_t{1} << b;
            taus_.push_back(tau);
        }
    }

    std::vector<std::vector<RecoverySet>> run(std::span<const std::size_t> targets) {
        targets_.assign(targets.begin(), targets.end());
        out_.assign(targets_.size(), {});
        nodes_ = 0;
        chosen_.clear();
        rows_.clear();
        walk(0, 0);
        for (auto& list : out_) {
            std::sort(list.begin(), list.end(), [](const RecoverySet& a, const RecoverySet& b) {
                const std::size_t sa = a.size();
                const std::size_t sb = b.size();
                if (sa != sb) return sa < sb;
                return a.coords.index_less(b.coords);
            });
        }
        return std::move(out_);
    }

private:
    static bool reduce_insert(std::vector<std::uint64_t>& rows, std::uint64_t v) {
        for (std::uint64_t r : rows) {
            if (v & (r & -r)) v ^= r;
        }
        if (v == 0) return false;
        rows.push_back(v);
        return true;
    }

    void walk(std::size_t from, std::uint64_t sum) {
        if (++nodes_ > budget_) {
            throw BudgetExceeded("recovery-set enumeration exceeded " + std::to_string(budget_) + " nodes");
        }
        for (std::size_t t = 0; t < targets_.size(); ++t) emit_if_valid(t, taus_[targets_[t]] ^ sum);
        if (chosen_.size() >= max_size_) return;
        for (std::size_t i = from; i < rest_.size(); ++i) {
            const std::size_t col = rest_[i];
            const std::size_t mark = rows_.size();
            if (!reduce_insert(rows_, coeff_[col])) continue;
            chosen_.push_back(col);
            walk(i + 1, sum ^ coeff_[col]);
            chosen_.pop_back();
            rows_.resize(mark);
        }
    }

    void emit_if_valid(std::size_t t, std::uint64_t residual) {
        const std::size_t total = chosen_.size() + static_cast<std::size_t>(std::popcount(residual));
        if (total == 0 || total > max_size_) return;
        std::vector<std::uint64_t>& proj = scratch_;
        proj.clear();
        for (std::size_t col : chosen_) {
            if (!reduce_insert(proj, coeff_[col] & ~residual)) return;
        }
        RecoverySet rs{targets_[t], BitVec(g_.n())};
        for (std::size_t col : chosen_) rs.coords.set(col);
        for (std::uint64_t r = residual; r; r &= r - 1) rs.coords.set(info_[static_cast<std::size_t>(std::countr_zero(r))]);
        out_[t].push_back(std::move(rs));
    }

    const GeneratorMatrix& g_;
    std::size_t k_;
    std::size_t max_size_;
    std::uint64_t budget_;
    std::vector<std::size_t> info_;
    std::vector<std::size_t> rest_;
    std::vector<std::uint64_t> coeff_;
    std::vector<std::uint64_t> taus_;
    std::vector<std::size_t> targets_;
    std::vector<std::size_t> chosen_;
    std::vector<std::uint64_t> rows_;
    std::vector<std::uint64_t> scratch_;
    std::uint64_t nodes_ = 0;
    std::vector<std::vector<RecoverySet>> out_;
};

}  // namespace

std::vector<RecoverySet> enumerate_recovery_sets(const GeneratorMatrix& g, std::size_t target,
                                                 std::size_t max_size, std::uint64_t node_budget) {
    if (target >= g.k()) throw std::out_of_range("recovery target outside [k]");
    if (max_size > g.n()) throw std::invalid_argument("max_size exceeds code length");
    if (g.k() <= 64) {
        WordEnumerator e(g, max_size, node_budget);
        const std::size_t targets[] = {target};
        return std::move(e.run(targets).front());
    }
    RecoveryEnumerator e(g, max_size, node_budget);
    return e.run(target);
}

RecoveryCatalog::RecoveryCatalog(const GeneratorMatrix& g, const SearchLimits& limits)
    : code_(g), max_set_size_(limits.max_set_size == 0 ? g.n() : limits.max_set_size) {
    if (max_set_size_ > g.n()) throw std::invalid_argument("max_set_size exceeds code length");
    if (g.k() <= 64) {
        std::vector<std::size_t> all(g.k());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        WordEnumerator e(code_, max_set_size_, limits.node_budget);
        sets_ = e.run(all);
        return;
    }
    RecoveryEnumerator e(code_, max_set_size_, limits.node_budget);
    sets_.reserve(g.k());
    for (std::size_t i = 0; i < g.k(); ++i) sets_.push_back(e.run(i));
}

const RecoverySet* RecoveryCatalog::first_avoiding(std::size_t target, const BitVec& blocked) const {
    for (const RecoverySet& s : sets_[target]) {
        if (!s.coords.intersects(blocked)) return &s;
    }
    return nullptr;
}

namespace {

class AssignmentSearch {
public:
    AssignmentSearch(const RecoveryCatalog& catalog, std::span<const std::size_t> targets, std::uint64_t budget)
        : catalog_(catalog), targets_(targets), budget_(budget) {}

    /// Visits every assignment (up to permutations among equal targets) in
    /// smallest-first order. visit returns false to stop.
    template <typename Visit>
    void for_each(const BitVec& blocked, Visit&& visit) {
        chosen_.assign(targets_.size(), nullptr);
        index_.assign(targets_.size(), 0);
        stop_ = false;
        descend(0, blocked, visit);
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<const RecoverySet*>& chosen() const { return chosen_; }

private:
    template <typename Visit>
    void descend(std::size_t pos, const BitVec& used, Visit& visit) {
        if (++nodes_ > budget_) {
            throw BudgetExceeded("assignment search exceeded " + std::to_string(budget_) + " nodes");
        }
        if (pos == targets_.size()) {
            if (!visit(chosen_)) stop_ = true;
            return;
        }
        const auto& sets = catalog_.sets(targets_[pos]);
        // equal targets in adjacent positions take sets in increasing order
        std::size_t start = 0;
        if (pos > 0 && targets_[pos] == targets_[pos - 1]) start = index_[pos - 1] + 1;
        for (std::size_t i = start; i < sets.size() && !stop_; ++i) {
            if (sets[i].coords.intersects(used)) continue;
            chosen_[pos] = &sets[i];
            index_[pos] = i;
            descend(pos + 1, used | sets[i].coords, visit);
        }
    }

    const RecoveryCatalog& catalog_;
    std::span<const std::size_t> targets_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool stop_ = false;
    std::vector<const RecoverySet*> chosen_;
    std::vector<std::size_t> index_;
};

RecoveryAssignment to_assignment(const std::vector<const RecoverySet*>& sets) {
    RecoveryAssignment a;
    for (const RecoverySet* s : sets) a.sets.push_back(*s);
    return a;
}

}  // namespace

std::optional<RecoveryAssignment> find_disjoint_assignment(const RecoveryCatalog& catalog,
                                                           std::span<const std::size_t> targets,
                                                           const BitVec& blocked, std::uint64_t* nodes,
                                                           std::uint64_t node_budget) {
    for (std::size_t t : targets) {
        if (t >= catalog.k()) throw std::out_of_range("query index outside [k]");
    }
    // search over a sorted copy so equal targets are adjacent, then map back
    std::vector<std::size_t> order(targets.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return targets[a] < targets[b]; });
    std::vector<std::size_t> sorted;
    for (std::size_t i : order) sorted.push_back(targets[i]);

    AssignmentSearch search(catalog, sorted, node_budget);
    std::optional<RecoveryAssignment> found;
    search.for_each(blocked, [&](const std::vector<const RecoverySet*>& sets) {
        RecoveryAssignment a;
        a.sets.resize(sets.size());
        for (std::size_t i = 0; i < order.size(); ++i) a.sets[order[i]] = *sets[i];
        found = std::move(a);
        return false;
    });
    if (nodes) *nodes += search.nodes();
    return found;
}

std::optional<RecoveryAssignment> find_disjoint_assignment(const GeneratorMatrix& g, const Query& q,
                                                           const SearchLimits& limits) {
    RecoveryCatalog catalog(g, limits);
    return find_disjoint_assignment(catalog, q.indices, BitVec(g.n()), nullptr, limits.node_budget);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

std::string to_string(AsyncMode m) {
    switch (m) {
        case AsyncMode::strict: return "strict";
        case AsyncMode::scheduled: return "scheduled";
        case AsyncMode::relaxed: return "relaxed";
    }
    return "unknown";
}

AsyncMode parse_async_mode(const std::string& s) {
    if (s == "strict") return AsyncMode::strict;
    if (s == "scheduled") return AsyncMode::scheduled;
    if (s == "relaxed") return AsyncMode::relaxed;
    throw std::invalid_argument("unknown asynchronous mode '" + s + "'");
}

double multiset_count(std::size_t k, std::size_t t) {
    // C(k + t - 1, t)
    double c = 1;
    for (std::size_t i = 1; i <= t; ++i) c = c * static_cast<double>(k + i - 1) / static_cast<double>(i);
    return std::round(c);
}

namespace {

template <typename Result>
bool query_space_too_large(Result& r, std::size_t k, std::size_t t, const SearchLimits& limits) {
    r.cost.query_space = multiset_count(k, t);
    if (r.cost.query_space > static_cast<double>(limits.query_budget)) {
        r.cost.over_budget = true;
        r.verdict = Verdict::budget_exceeded;
        return true;
    }
    return false;
}

}  // namespace

BatchResult is_batch_code(const RecoveryCatalog& catalog, std::size_t t, const SearchLimits& limits) {
    if (t == 0) throw std::invalid_argument("query size t must be positive");
    BatchResult r;
    r.cost.max_set_size = catalog.max_set_size();
    if (query_space_too_large(r, catalog.k(), t, limits)) return r;
    const BitVec none(catalog.n());
    try {
        for_each_multiset(catalog.k(), t, [&](const std::vector<std::size_t>& q) {
            ++r.cost.queries_checked;
            if (!find_disjoint_assignment(catalog, q, none, &r.cost.nodes, limits.node_budget)) {
                r.verdict = Verdict::fails;
                r.counterexample = Query{q};
                return false;
            }
            return true;
        });
    } catch (const BudgetExceeded&) {
        r.verdict = Verdict::budget_exceeded;
        r.cost.over_budget = true;
    }
    return r;
}

BatchResult is_batch_code(const GeneratorMatrix& g, std::size_t t, const SearchLimits& limits) {
    try {
        RecoveryCatalog catalog(g, limits);
        return is_batch_code(catalog, t, limits);
    } catch (const BudgetExceeded&) {
        BatchResult r;
        r.verdict = Verdict::budget_exceeded;
        r.cost.over_budget = true;
        return r;
    }
}

PirResult is_pir_code(const RecoveryCatalog& catalog, std::size_t t, const SearchLimits& limits) {
    if (t == 0) throw std::invalid_argument("query size t must be positive");
    PirResult r;
    r.cost.max_set_size = catalog.max_set_size();
    r.cost.query_space = static_cast<double>(catalog.k());
    const BitVec none(catalog.n());
    try {
        for (std::size_t i = 0; i < catalog.k(); ++i) {
            ++r.cost.queries_checked;
            const std::vector<std::size_t> q(t, i);
            if (!find_disjoint_assignment(catalog, q, none, &r.cost.nodes, limits.node_budget)) {
                r.verdict = Verdict::fails;
                r.counterexample = i;
                break;
            }
        }
    } catch (const BudgetExceeded&) {
        r.verdict = Verdict::budget_exceeded;
        r.cost.over_budget = true;
    }
    return r;
}

PirResult is_pir_code(const GeneratorMatrix& g, std::size_t t, const SearchLimits& limits) {
    try {
        RecoveryCatalog catalog(g, limits);
        return is_pir_code(catalog, t, limits);
    } catch (const BudgetExceeded&) {
        PirResult r;
        r.verdict = Verdict::budget_exceeded;
        r.cost.over_budget = true;
        return r;
    }
}

namespace {

/// Memoised "can every symbol still be served beside these busy servers".
class NewcomerOracle {
public:
    explicit NewcomerOracle(const RecoveryCatalog& catalog) : catalog_(catalog) {}

    /// Returns the first symbol with no recovery set avoiding busy, or k.
    std::size_t first_unservable(const BitVec& busy) {
        auto it = memo_.find(busy);
        if (it != memo_.end()) return it->second;
        std::size_t bad = catalog_.k();
        for (std::size_t l = 0; l < catalog_.k(); ++l) {
            if (!catalog_.first_avoiding(l, busy)) {
                bad = l;
                break;
            }
        }
        memo_.emplace(busy, bad);
        return bad;
    }

private:
    const RecoveryCatalog& catalog_;
    std::unordered_map<BitVec, std::size_t, BitVecHash> memo_;
};

BitVec union_except(const std::vector<const RecoverySet*>& sets, std::size_t skip, std::size_t n) {
    BitVec u(n);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i != skip) u |= sets[i]->coords;
    }
    return u;
}

}  // namespace

AsyncResult is_asynchronous_batch_code(const RecoveryCatalog& catalog, std::size_t t, AsyncMode mode,
                                       const SearchLimits& limits) {
    AsyncResult r;
    r.mode = mode;
    const BatchResult batch = is_batch_code(catalog, t, limits);
    r.cost = batch.cost;
    if (batch.verdict != Verdict::holds) {
        r.verdict = batch.verdict;
        r.batch_counterexample = batch.counterexample;
        return r;
    }

    const std::size_t k = catalog.k();
    const std::size_t n = catalog.n();
    NewcomerOracle oracle(catalog);
    r.cost.queries_checked = 0;

    try {
        for_each_multiset(k, t, [&](const std::vector<std::size_t>& q) {
            ++r.cost.queries_checked;
            AssignmentSearch search(catalog, q, limits.node_budget);
            std::optional<AsyncWitness> first_failure;
            bool robust_found = false;

            search.for_each(BitVec(n), [&](const std::vector<const RecoverySet*>& sets) {
                for (std::size_t j = 0; j < t; ++j) {
                    const BitVec busy = union_except(sets, j, n);
                    std::size_t bad = k;
                    if (mode == AsyncMode::relaxed) {
                        // the t-1 remaining symbols plus any newcomer must form
                        // a satisfiable query on their own
                        for (std::size_t l = 0; l < k && bad == k; ++l) {
                            std::vector<std::size_t> next;
                            for (std::size_t p = 0; p < t; ++p) {
                                if (p != j) next.push_back(q[p]);
                            }
                            next.push_back(l);
                            if (!find_disjoint_assignment(catalog, next, BitVec(n), &r.cost.nodes,
                                                          limits.node_budget)) {
                                bad = l;
                            }
                        }
                    } else {
                        bad = oracle.first_unservable(busy);
                    }
                    if (bad != k) {
                        if (!first_failure) first_failure = AsyncWitness{Query{q}, to_assignment(sets), j, bad};
                        // strict and relaxed fail on the first bad assignment;
                        // scheduled moves on to the next candidate
                        return mode == AsyncMode::scheduled;
                    }
                }
                if (mode == AsyncMode::scheduled) {
                    robust_found = true;
                    return false;
                }
                // relaxed only depends on the query, one assignment suffices
                return mode == AsyncMode::strict;
            });
            r.cost.nodes += search.nodes();

            const bool failed = mode == AsyncMode::scheduled ? !robust_found : first_failure.has_value();
            if (failed) {
                r.verdict = Verdict::fails;
                r.witness = std::move(first_failure);
                return false;
            }
            return true;
        });
    } catch (const BudgetExceeded&) {
        r.verdict = Verdict::budget_exceeded;
        r.cost.over_budget = true;
    }
    return r;
}

AsyncResult is_asynchronous_batch_code(const GeneratorMatrix& g, std::size_t t, AsyncMode mode,
                                       const SearchLimits& limits) {
    try {
        RecoveryCatalog catalog(g, limits);
        return is_asynchronous_batch_code(catalog, t, mode, limits);
    } catch (const BudgetExceeded&) {
        AsyncResult r;
        r.mode = mode;
        r.verdict = Verdict::budget_exceeded;
        r.cost.over_budget = true;
        return r;
    }
}

}  // namespace abatch
