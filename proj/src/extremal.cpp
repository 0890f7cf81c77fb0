#include <abatch/extremal.hpp>

#include <abatch/constructions.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace abatch {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> candidate_edges(std::size_t eta, std::size_t r) {
    std::vector<Mask> out;
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        Mask m = 0;
        for (std::size_t v : cur) m |= Mask{1} << v;
        out.push_back(m);
        std::size_t pos = r;
        while (pos > 0 && cur[pos - 1] == eta - r + pos - 1) --pos;
        if (pos == 0) return out;
        ++cur[pos - 1];
        for (std::size_t i = pos; i < r; ++i) cur[i] = cur[i - 1] + 1;
    }
}

std::vector<std::size_t> mask_vertices(Mask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

/// Lexicographic order of sorted vertex lists.
bool mask_less(Mask a, Mask b) { return mask_vertices(a) < mask_vertices(b); }

enum class Predicate { berge_girth, condition };

/**
 * Include-first branch and bound over lexicographically ordered candidate
 * edges. Every node keeps the list of later candidates that are still
 * compatible with the chosen edges; both predicates are hereditary, so a
 * candidate that becomes incompatible never returns.
 */
class MaxEdgeSearch {
public:
    MaxEdgeSearch(std::size_t eta, std::size_t r, std::size_t kappa, Predicate pred, std::uint64_t budget)
        : eta_(eta), r_(r), kappa_(kappa), pred_(pred), budget_(budget) {
        candidates_ = candidate_edges(eta, r);
        std::sort(candidates_.begin(), candidates_.end(), mask_less);
    }

    ExtremalSearch run() {
        std::vector<std::size_t> all(candidates_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        // any nonempty r-graph has a relabelling whose first edge is {0..r-1}
        chosen_.push_back(0);
        ++nodes_;
        record();
        std::vector<std::size_t> rest;
        for (std::size_t i = 1; i < all.size(); ++i) {
            if (compatible(candidates_[i])) rest.push_back(i);
        }
        dfs(rest);
        ExtremalSearch out;
        out.value = best_.size();
        std::vector<std::vector<std::size_t>> edges;
        for (std::size_t i : best_) edges.push_back(mask_vertices(candidates_[i]));
        out.witness = Hypergraph(eta_, std::move(edges));
        out.exact = !over_budget_;
        out.nodes = nodes_;
        return out;
    }

private:
    /// Second edges are limited to {0..s-1} + {r..2r-s-1}: relabel so the
    /// second edge has the largest overlap with the first.
    bool canonical_second(Mask e) const {
        const Mask first = candidates_[0];
        const std::size_t s = static_cast<std::size_t>(std::popcount(e & first));
        Mask want = 0;
        for (std::size_t i = 0; i < s; ++i) want |= Mask{1} << i;
        for (std::size_t i = 0; i < r_ - s; ++i) want |= Mask{1} << (r_ + i);
        return e == want;
    }

    void record() {
        if (chosen_.size() > best_.size()) best_ = chosen_;
    }

    void dfs(const std::vector<std::size_t>& options) {
        for (std::size_t idx = 0; idx < options.size(); ++idx) {
            if (chosen_.size() + (options.size() - idx) <= best_.size()) return;
            if (nodes_ >= budget_) {
                over_budget_ = true;
                return;
            }
            const std::size_t c = options[idx];
            if (chosen_.size() == 1 && !canonical_second(candidates_[c])) continue;
            ++nodes_;
            chosen_.push_back(c);
            record();
            std::vector<std::size_t> next;
            for (std::size_t j = idx + 1; j < options.size(); ++j) {
                if (compatible(candidates_[options[j]])) next.push_back(options[j]);
            }
            dfs(next);
            chosen_.pop_back();
            if (over_budget_) return;
        }
    }

    bool compatible(Mask e) const {
        return pred_ == Predicate::berge_girth ? girth_ok(e) : condition_ok(e);
    }

    /// Adding e closes a Berge cycle of length d+1 for two of its vertices
    /// at Berge distance d; all such cycles must be longer than kappa.
    bool girth_ok(Mask e) const {
        std::vector<Mask> nb(eta_, 0);
        for (std::size_t i : chosen_) {
            const Mask m = candidates_[i];
            for (std::size_t v : mask_vertices(m)) nb[v] |= m;
        }
        for (std::size_t u : mask_vertices(e)) {
            Mask reached = Mask{1} << u;
            Mask frontier = reached;
            // vertices at distance <= kappa-1 from u
            for (std::size_t d = 1; d < kappa_ && frontier; ++d) {
                Mask grow = 0;
                for (std::size_t v : mask_vertices(frontier)) grow |= nb[v];
                frontier = grow & ~reached;
                reached |= grow;
            }
            if ((reached & e) != (Mask{1} << u)) return false;
        }
        return true;
    }

    /// Every kappa-subset containing e spans at least kappa*(r-1)+1 vertices.
    bool condition_ok(Mask e) const {
        if (chosen_.size() + 1 < kappa_) return true;
        const std::size_t need = kappa_ * (r_ - 1) + 1;
        std::vector<std::size_t> pick;
        return condition_rec(0, e, pick, need);
    }

    bool condition_rec(std::size_t from, Mask span, std::vector<std::size_t>& pick, std::size_t need) const {
        if (pick.size() + 1 == kappa_) return static_cast<std::size_t>(std::popcount(span)) >= need;
        for (std::size_t i = from; i < chosen_.size(); ++i) {
            pick.push_back(i);
            const bool ok = condition_rec(i + 1, span | candidates_[chosen_[i]], pick, need);
            pick.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    std::size_t eta_;
    std::size_t r_;
    std::size_t kappa_;
    Predicate pred_;
    std::uint64_t budget_;
    std::vector<Mask> candidates_;
    std::vector<std::size_t> chosen_;
    std::vector<std::size_t> best_;
    std::uint64_t nodes_ = 0;
    bool over_budget_ = false;
};

void check_args(std::size_t eta, std::size_t r, std::size_t kappa) {
    if (r < 2 || eta < r) throw std::invalid_argument("extremal search needs 2 <= r <= eta");
    if (eta > 64) throw std::invalid_argument("extremal search supports at most 64 vertices");
    if (kappa < 2) throw std::invalid_argument("extremal search needs kappa >= 2");
}

}  // namespace

ExtremalSearch max_edges_berge_girth(std::size_t eta, std::size_t r, std::size_t kappa, const ExtremalLimits& limits) {
    check_args(eta, r, kappa);
    return MaxEdgeSearch(eta, r, kappa, Predicate::berge_girth, limits.node_budget).run();
}

ExtremalSearch max_edges_condition(std::size_t eta, std::size_t r, std::size_t kappa, const ExtremalLimits& limits) {
    check_args(eta, r, kappa);
    return MaxEdgeSearch(eta, r, kappa, Predicate::condition, limits.node_budget).run();
}

ExtremalResult verify_theorem5(std::size_t eta, std::size_t r, std::size_t kappa, const ExtremalLimits& limits) {
    ExtremalResult out;
    out.eta = eta;
    out.r = r;
    out.kappa = kappa;
    out.b = max_edges_berge_girth(eta, r, kappa, limits);
    out.f = max_edges_condition(eta, r, kappa, limits);
    try {
        RewireResult rw = rewire(out.f.witness, kappa);
        const auto g = berge_girth(rw.hypergraph);
        const bool girth_ok = !g || *g >= kappa + 1;
        const bool cond_ok = satisfies_condition(rw.hypergraph, kappa).holds;
        const bool count_ok = rw.hypergraph.edge_count() == out.f.witness.edge_count();
        out.rewire_ok = girth_ok && cond_ok && count_ok;
        out.rewire_note = std::to_string(rw.steps.size()) + " rewiring steps";
        if (!out.rewire_ok) out.rewire_note += "; postcondition failed";
        out.rewired = std::move(rw.hypergraph);
    } catch (const std::exception& e) {
        out.rewire_ok = false;
        out.rewire_note = e.what();
    }
    return out;
}

std::vector<RedundancyRow> redundancy_table(std::size_t t, std::size_t k_min, std::size_t k_max) {
    if (t < 3) throw std::invalid_argument("redundancy table needs t >= 3");
    if (k_min == 0 || k_min > k_max) throw std::invalid_argument("k range must satisfy 1 <= k_min <= k_max");
    std::vector<RedundancyRow> rows;
    auto fill = [](RedundancyRow row) {
        const double s = std::sqrt(static_cast<double>(row.k));
        row.lower_bound = 2 * s;
        row.rao_vardy = std::sqrt(2.0 * static_cast<double>(row.k));
        row.ratio = static_cast<double>(row.rho) / s;
        row.tight = row.rho * row.rho == 4 * row.k;
        return row;
    };
    if (t == 3) {
        for (std::size_t k = k_min; k <= k_max; ++k) {
            std::size_t best_a = 1, best_b = k;
            for (std::size_t a = 1; a * a <= k; ++a) {
                const std::size_t b = (k + a - 1) / a;
                if (a + b < best_a + best_b) {
                    best_a = a;
                    best_b = b;
                }
            }
            RedundancyRow row;
            row.k = k;
            row.rho = best_a + best_b;
            row.construction = "subdivided K_" + std::to_string(best_a) + "," + std::to_string(best_b);
            rows.push_back(fill(row));
        }
        return rows;
    }
    const std::size_t r = t - 1;
    std::size_t last_k = 0;
    for (std::size_t m = r; ; ++m) {
        const auto slopes = efr_slopes(m, r);
        const std::size_t k = efr_edge_count(m, r, slopes);
        if (k > k_max) break;
        if (k < k_min || k == last_k || k == 0) continue;
        last_k = k;
        RedundancyRow row;
        row.k = k;
        row.rho = m * r;
        row.construction = "grid lines m=" + std::to_string(m) + " r=" + std::to_string(r);
        rows.push_back(fill(row));
    }
    return rows;
}

bool ratio_nondecreasing(const std::vector<RedundancyRow>& rows) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].ratio < rows[i - 1].ratio) return false;
    }
    return true;
}

}  // namespace abatch
