#include <abatch/constructions.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

namespace abatch {

GraphCode make_graph_code(BipartiteGraph graph, std::size_t t, CertifyTarget target, std::string family) {
    GeneratorMatrix code = code_from_bipartite(graph);
    CodeReport report;
    report.n = code.n();
    report.k = code.k();
    report.t = t;
    report.rho = code.redundancy();
    report.family = std::move(family);
    report.girth = girth(graph);
    const Theorem1Certificate cert = theorem1_certify(graph, t, target);
    report.certified_by = cert.status == CertifyStatus::certified ? "theorem1" : "none";
    return {std::move(graph), std::move(code), std::move(report)};
}

GraphCode construct_t3_optimal(std::size_t m) {
    if (m < 2) throw std::invalid_argument("t=3 construction needs m >= 2");
    std::vector<std::vector<std::size_t>> adj;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) adj.push_back({a, m + b});
    }
    return make_graph_code(BipartiteGraph(m * m, 2 * m, std::move(adj)), 3, CertifyTarget::batch, "t3");
}

bool PackingDesign::valid() const {
    std::vector<std::vector<bool>> used(eta, std::vector<bool>(eta, false));
    for (const auto& block : blocks) {
        if (block.size() != r) return false;
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (block[i] >= eta || (i > 0 && block[i - 1] >= block[i])) return false;
            for (std::size_t j = 0; j < i; ++j) {
                if (used[block[j]][block[i]]) return false;
                used[block[j]][block[i]] = true;
            }
        }
    }
    return true;
}

Hypergraph PackingDesign::hypergraph() const { return Hypergraph(eta, blocks); }

namespace {

std::vector<std::vector<std::size_t>> all_subsets(std::size_t eta, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(r);
    for (std::size_t i = 0; i < r; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t pos = r;
        while (pos > 0 && cur[pos - 1] == eta - r + pos - 1) --pos;
        if (pos == 0) return out;
        ++cur[pos - 1];
        for (std::size_t i = pos; i < r; ++i) cur[i] = cur[i - 1] + 1;
    }
}

std::vector<std::vector<std::size_t>> greedy_pass(std::size_t eta,
                                                  const std::vector<std::vector<std::size_t>>& candidates) {
    std::vector<std::vector<bool>> used(eta, std::vector<bool>(eta, false));
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& c : candidates) {
        bool ok = true;
        for (std::size_t i = 0; i < c.size() && ok; ++i) {
            for (std::size_t j = 0; j < i && ok; ++j) ok = !used[c[j]][c[i]];
        }
        if (!ok) continue;
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) used[c[j]][c[i]] = true;
        }
        blocks.push_back(c);
    }
    return blocks;
}

}  // namespace

PackingDesign greedy_packing(std::size_t eta, std::size_t r, const PackingOptions& options) {
    if (r < 2 || eta < r) throw std::invalid_argument("packing needs eta >= r >= 2");
    auto candidates = all_subsets(eta, r);
    PackingDesign best{eta, r, {}};
    if (options.order == PackingOrder::lexicographic) {
        best.blocks = greedy_pass(eta, candidates);
        return best;
    }
    const std::size_t bound = johnson_bound(eta, r);
    std::mt19937_64 rng(options.seed);
    const std::size_t rounds = std::max<std::size_t>(options.restarts, 1);
    for (std::size_t round = 0; round < rounds; ++round) {
        std::shuffle(candidates.begin(), candidates.end(), rng);
        auto blocks = greedy_pass(eta, candidates);
        if (blocks.size() > best.blocks.size()) best.blocks = std::move(blocks);
        if (best.blocks.size() >= bound) break;
    }
    std::sort(best.blocks.begin(), best.blocks.end());
    return best;
}

std::size_t johnson_bound(std::size_t eta, std::size_t r) {
    if (r < 2 || eta < r) throw std::invalid_argument("Johnson bound needs eta >= r >= 2");
    return eta * ((eta - 1) / (r - 1)) / r;
}

GraphCode pir_code_from_packing(const PackingDesign& design) {
    if (!design.valid()) throw std::invalid_argument("packing design has a pair in two blocks");
    if (design.blocks.empty()) throw std::invalid_argument("packing design has no blocks");
    GraphCode out = make_graph_code(incidence_graph(design.hypergraph()), design.r + 1, CertifyTarget::pir, "packing");
    out.report.berge_girth = berge_girth(design.hypergraph());
    return out;
}

bool is_3ap_free(const std::vector<std::size_t>& values) {
    std::vector<std::size_t> v = values;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const std::size_t z = 2 * v[j] - v[i];
            if (std::binary_search(v.begin() + static_cast<std::ptrdiff_t>(j) + 1, v.end(), z)) return false;
        }
    }
    return true;
}

namespace {

/// Exact maximum 3AP-free subsets of [1..n] for small n.
class ExactApFree {
public:
    std::vector<std::size_t> solve(std::size_t n) {
        // best sizes for shorter intervals bound the remaining suffix
        while (sizes_.size() <= n) {
            const std::size_t len = sizes_.size();
            if (len == 0) {
                sizes_.push_back(0);
                continue;
            }
            sizes_.push_back(search(len).size());
        }
        return search(n);
    }

private:
    std::vector<std::size_t> search(std::size_t n) {
        n_ = n;
        best_.clear();
        cur_.clear();
        dfs(1);
        return best_;
    }

    bool fits(std::size_t x) const {
        for (std::size_t y : cur_) {
            const std::size_t z = 2 * y;
            if (z > x && std::find(cur_.begin(), cur_.end(), z - x) != cur_.end()) return false;
        }
        return true;
    }

    void dfs(std::size_t i) {
        if (i > n_) {
            if (cur_.size() > best_.size()) best_ = cur_;
            return;
        }
        const std::size_t remaining = n_ - i + 1;
        const std::size_t cap = remaining < sizes_.size() ? sizes_[remaining] : remaining;
        if (cur_.size() + cap <= best_.size()) return;
        if (fits(i)) {
            cur_.push_back(i);
            dfs(i + 1);
            cur_.pop_back();
        }
        dfs(i + 1);
    }

    std::size_t n_ = 0;
    std::vector<std::size_t> cur_;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> sizes_;
};

/// Numbers 1 + sum x_i (2d-1)^i with digits x_i < d on the most populated
/// sphere sum x_i^2 = const, restricted to [1..nmax].
std::vector<std::size_t> sphere_set(std::size_t nmax, std::size_t d) {
    const std::size_t base = 2 * d - 1;
    std::size_t dims = 0;
    for (std::size_t p = 1; p * base <= nmax; p *= base) ++dims;
    if (dims == 0) return {};
    std::map<std::size_t, std::vector<std::size_t>> shells;
    std::vector<std::size_t> digits(dims, 0);
    while (true) {
        std::size_t value = 0, norm = 0, p = 1;
        for (std::size_t i = 0; i < dims; ++i) {
            value += digits[i] * p;
            norm += digits[i] * digits[i];
            p *= base;
        }
        if (value + 1 <= nmax) shells[norm].push_back(value + 1);
        std::size_t pos = 0;
        while (pos < dims && digits[pos] == d - 1) digits[pos++] = 0;
        if (pos == dims) break;
        ++digits[pos];
    }
    std::vector<std::size_t> best;
    for (auto& [norm, values] : shells) {
        if (values.size() > best.size()) best = values;
    }
    std::sort(best.begin(), best.end());
    return best;
}

}  // namespace

std::vector<std::size_t> behrend_set(std::size_t nmax) {
    if (nmax == 0) throw std::invalid_argument("behrend_set needs nmax >= 1");
    if (nmax <= 30) {
        ExactApFree exact;
        return exact.solve(nmax);
    }
    std::vector<std::size_t> best{1};
    for (std::size_t d = 2; d <= 10; ++d) {
        auto s = sphere_set(nmax, d);
        if (s.size() > best.size()) best = std::move(s);
    }
    if (!is_3ap_free(best)) throw std::logic_error("sphere construction produced a 3-term progression");
    return best;
}

std::size_t efr_edge_count(std::size_t m, std::size_t r, const std::vector<std::size_t>& slopes) {
    std::size_t count = 0;
    for (std::size_t a : slopes) {
        const std::size_t span = (r - 1) * a;
        if (span < m) count += m - span;
    }
    return count;
}

std::vector<std::size_t> efr_slopes(std::size_t m, std::size_t r) {
    if (r < 2) throw std::invalid_argument("efr_slopes needs r >= 2");
    const std::size_t limit = m == 0 ? 0 : (m - 1) / (r - 1);
    std::vector<std::size_t> best;
    std::size_t best_edges = 0;
    for (std::size_t n = 1; n <= limit; ++n) {
        auto s = behrend_set(n);
        const std::size_t e = efr_edge_count(m, r, s);
        if (e > best_edges) {
            best_edges = e;
            best = std::move(s);
        }
    }
    return best;
}

EfrHypergraph efr_hypergraph(std::size_t m, std::size_t r, const std::vector<std::size_t>& slopes) {
    if (r < 3) throw std::invalid_argument("EFR construction needs r >= 3");
    for (std::size_t a : slopes) {
        if (a < 1 || a > m) throw std::invalid_argument("slope " + std::to_string(a) + " outside [1..m]");
    }
    if (!is_3ap_free(slopes)) throw std::invalid_argument("slope set contains a 3-term arithmetic progression");

    std::vector<std::size_t> sorted = slopes;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<std::vector<std::size_t>> edges;
    for (std::size_t a : sorted) {
        for (std::size_t x = 1; x + (r - 1) * a <= m; ++x) {
            std::vector<std::size_t> line;
            for (std::size_t j = 0; j < r; ++j) line.push_back(j * m + (x + j * a) - 1);
            edges.push_back(std::move(line));
        }
    }
    EfrHypergraph out;
    out.m = m;
    out.r = r;
    out.slopes = sorted;
    out.hypergraph = Hypergraph(m * r, std::move(edges));
    out.berge_girth = berge_girth(out.hypergraph);
    if (out.berge_girth && *out.berge_girth < 4) {
        out.hypergraph = rewire(out.hypergraph, 3).hypergraph;
        out.repaired = true;
        out.berge_girth = berge_girth(out.hypergraph);
    }
    return out;
}

GraphCode efr_code(const EfrHypergraph& h) {
    if (h.hypergraph.edge_count() == 0) throw std::invalid_argument("EFR hypergraph has no lines");
    GraphCode out = make_graph_code(incidence_graph(h.hypergraph), h.r + 1, CertifyTarget::batch, "efr");
    out.report.berge_girth = h.berge_girth;
    return out;
}

GeneratorMatrix simplex_counterexample() {
    const std::vector<std::string> rows{"1001101", "0101011", "0010111"};
    return GeneratorMatrix::from_strings(rows);
}

GeneratorMatrix example1_code() {
    const std::vector<std::string> rows{"10001010", "01001001", "00100110", "00010101"};
    return GeneratorMatrix::from_strings(rows);
}

}  // namespace abatch
