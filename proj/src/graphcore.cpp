#include <abatch/graphcore.hpp>

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace abatch {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Cycle {
    std::size_t length = kNone;
    std::vector<std::size_t> vertices;
};

/// Per-vertex BFS; every non-tree edge closes a walk through the source,
/// and the globally shortest such walk is a simple cycle.
Cycle shortest_cycle_impl(const std::vector<std::vector<std::size_t>>& adj,
                          const std::vector<std::vector<std::size_t>>& eid, bool want_vertices) {
    const std::size_t nv = adj.size();
    Cycle best;
    std::vector<std::size_t> dist(nv), parent(nv), parent_edge(nv);
    std::deque<std::size_t> queue;
    for (std::size_t s = 0; s < nv; ++s) {
        std::fill(dist.begin(), dist.end(), kNone);
        dist[s] = 0;
        parent[s] = kNone;
        parent_edge[s] = kNone;
        queue.assign(1, s);
        std::size_t found_u = kNone, found_w = kNone;
        std::size_t local = kNone;
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            // any cycle found later from this source is at least 2*dist[u]+1 long
            if (best.length != kNone && 2 * dist[u] + 1 >= best.length) break;
            if (local != kNone && 2 * dist[u] + 1 >= local) break;
            for (std::size_t i = 0; i < adj[u].size(); ++i) {
                const std::size_t w = adj[u][i];
                if (eid[u][i] == parent_edge[u]) continue;
                if (dist[w] == kNone) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    parent_edge[w] = eid[u][i];
                    queue.push_back(w);
                } else {
                    const std::size_t len = dist[u] + dist[w] + 1;
                    if (len < local) {
                        local = len;
                        found_u = u;
                        found_w = w;
                    }
                }
            }
        }
        if (local < best.length) {
            best.length = local;
            if (want_vertices) {
                std::vector<std::size_t> left, right;
                for (std::size_t x = found_u; x != kNone; x = parent[x]) left.push_back(x);
                for (std::size_t x = found_w; x != kNone; x = parent[x]) right.push_back(x);
                std::reverse(left.begin(), left.end());  // s .. u
                right.pop_back();                        // w .. (child of s)
                best.vertices = left;
                best.vertices.insert(best.vertices.end(), right.begin(), right.end());
            }
        }
    }
    return best;
}

struct EdgeIds {
    std::vector<std::vector<std::size_t>> adj;
    std::vector<std::vector<std::size_t>> eid;
};

EdgeIds incidence_lists(const Hypergraph& h) {
    const std::size_t m = h.edge_count();
    EdgeIds out;
    out.adj.resize(m + h.v_size());
    out.eid.resize(m + h.v_size());
    std::size_t id = 0;
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t v : h.edge(e)) {
            out.adj[e].push_back(m + v);
            out.eid[e].push_back(id);
            out.adj[m + v].push_back(e);
            out.eid[m + v].push_back(id);
            ++id;
        }
    }
    return out;
}

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("graph edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph self-loops are not supported");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edges_;
}

BipartiteGraph::BipartiteGraph(std::size_t a, std::size_t b, std::vector<std::vector<std::size_t>> adjacency)
    : a_(a), b_(b), adj_(std::move(adjacency)) {
    if (adj_.size() != a_) {
        throw std::invalid_argument("bipartite adjacency has " + std::to_string(adj_.size()) +
                                    " lists, expected " + std::to_string(a_));
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw std::invalid_argument("bipartite adjacency has a duplicate edge");
        }
        if (!list.empty() && list.back() >= b_) throw std::invalid_argument("bipartite adjacency index out of range");
    }
}

std::size_t BipartiteGraph::edge_count() const {
    std::size_t e = 0;
    for (const auto& list : adj_) e += list.size();
    return e;
}

std::size_t BipartiteGraph::min_left_degree() const {
    std::size_t d = kNone;
    for (const auto& list : adj_) d = std::min(d, list.size());
    return d == kNone ? 0 : d;
}

Graph BipartiteGraph::as_graph() const {
    Graph g(a_ + b_);
    for (std::size_t u = 0; u < a_; ++u) {
        for (std::size_t v : adj_[u]) g.add_edge(u, a_ + v);
    }
    return g;
}

BipartiteGraph BipartiteGraph::induced_on_right(const std::vector<bool>& keep) const {
    if (keep.size() != b_) throw std::invalid_argument("right-vertex mask has the wrong length");
    std::vector<std::vector<std::size_t>> adj(a_);
    for (std::size_t u = 0; u < a_; ++u) {
        for (std::size_t v : adj_[u]) {
            if (keep[v]) adj[u].push_back(v);
        }
    }
    return BipartiteGraph(a_, b_, std::move(adj));
}

Hypergraph::Hypergraph(std::size_t v_size, std::vector<std::vector<std::size_t>> edges)
    : v_(v_size), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.empty()) throw std::invalid_argument("hyperedges must be nonempty");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw std::invalid_argument("hyperedge repeats a vertex");
        }
        if (e.back() >= v_) throw std::invalid_argument("hyperedge vertex out of range");
    }
}

std::optional<std::size_t> Hypergraph::uniform_r() const {
    if (edges_.empty()) return std::nullopt;
    const std::size_t r = edges_.front().size();
    for (const auto& e : edges_) {
        if (e.size() != r) return std::nullopt;
    }
    return r;
}

std::size_t Hypergraph::degree(std::size_t v) const {
    std::size_t d = 0;
    for (const auto& e : edges_) d += std::binary_search(e.begin(), e.end(), v) ? 1 : 0;
    return d;
}

std::optional<std::size_t> girth(const Graph& g) {
    std::vector<std::vector<std::size_t>> adj(g.size()), eid(g.size());
    // explicit edge ids so parallel edges count as 2-cycles
    std::size_t id = 0;
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t w : g.neighbors(u)) {
            if (u < w) {
                adj[u].push_back(w);
                eid[u].push_back(id);
                adj[w].push_back(u);
                eid[w].push_back(id);
                ++id;
            }
        }
    }
    const Cycle c = shortest_cycle_impl(adj, eid, false);
    if (c.length == kNone) return std::nullopt;
    return c.length;
}

std::optional<std::size_t> girth(const BipartiteGraph& g) { return girth(g.as_graph()); }

std::vector<std::size_t> shortest_cycle(const Graph& g) {
    std::vector<std::vector<std::size_t>> adj(g.size()), eid(g.size());
    std::size_t id = 0;
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t w : g.neighbors(u)) {
            if (u < w) {
                adj[u].push_back(w);
                eid[u].push_back(id);
                adj[w].push_back(u);
                eid[w].push_back(id);
                ++id;
            }
        }
    }
    Cycle c = shortest_cycle_impl(adj, eid, true);
    return c.vertices;
}

BipartiteGraph incidence_graph(const Hypergraph& h) {
    return BipartiteGraph(h.edge_count(), h.v_size(), h.edges());
}

Hypergraph hypergraph_from_bipartite(const BipartiteGraph& g) {
    std::vector<std::vector<std::size_t>> edges;
    for (const auto& list : g.adjacency()) {
        if (list.empty()) throw std::invalid_argument("left vertex of degree 0 has no hyperedge counterpart");
        edges.push_back(list);
    }
    return Hypergraph(g.b_size(), std::move(edges));
}

std::optional<BergeCycle> shortest_berge_cycle(const Hypergraph& h) {
    const EdgeIds inc = incidence_lists(h);
    Cycle c = shortest_cycle_impl(inc.adj, inc.eid, true);
    if (c.length == kNone) return std::nullopt;
    const std::size_t m = h.edge_count();
    auto start = std::find_if(c.vertices.begin(), c.vertices.end(), [m](std::size_t x) { return x < m; });
    std::rotate(c.vertices.begin(), start, c.vertices.end());
    BergeCycle out;
    for (std::size_t i = 0; i < c.vertices.size(); i += 2) {
        out.edges.push_back(c.vertices[i]);
        out.vertices.push_back(c.vertices[i + 1] - m);
    }
    return out;
}

std::optional<std::size_t> berge_girth(const Hypergraph& h) {
    const EdgeIds inc = incidence_lists(h);
    const Cycle c = shortest_cycle_impl(inc.adj, inc.eid, false);
    if (c.length == kNone) return std::nullopt;
    return c.length / 2;
}

bool is_berge_cycle(const Hypergraph& h, const BergeCycle& c) {
    const std::size_t b = c.edges.size();
    if (b < 2 || c.vertices.size() != b) return false;
    std::vector<std::size_t> es = c.edges, vs = c.vertices;
    std::sort(es.begin(), es.end());
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
    for (std::size_t i = 0; i < b; ++i) {
        if (c.edges[i] >= h.edge_count() || c.vertices[i] >= h.v_size()) return false;
        const auto& e1 = h.edge(c.edges[i]);
        const auto& e2 = h.edge(c.edges[(i + 1) % b]);
        if (!std::binary_search(e1.begin(), e1.end(), c.vertices[i])) return false;
        if (!std::binary_search(e2.begin(), e2.end(), c.vertices[i])) return false;
    }
    return true;
}

bool is_berge_connected(const Hypergraph& h) {
    const std::size_t m = h.edge_count();
    const std::size_t total = m + h.v_size();
    if (total <= 1) return true;
    DisjointSets ds(total);
    std::size_t components = total;
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t v : h.edge(e)) components -= ds.unite(e, m + v) ? 1 : 0;
    }
    return components == 1;
}

std::string to_string(CycleClass c) {
    switch (c) {
        case CycleClass::tree: return "tree";
        case CycleClass::unicyclic: return "unicyclic";
        case CycleClass::multicyclic: return "multicyclic";
    }
    return "?";
}

Lemma4Classification lemma4_classify(const Hypergraph& h) {
    if (h.v_size() < 2) throw std::invalid_argument("classification needs at least two vertices");
    if (!is_berge_connected(h)) throw std::invalid_argument("hypergraph is not Berge-connected");
    long long checksum = -static_cast<long long>(h.v_size() - 1);
    for (const auto& e : h.edges()) checksum += static_cast<long long>(e.size()) - 1;

    const std::size_t m = h.edge_count();
    DisjointSets ds(m + h.v_size());
    std::size_t rank = 0;
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t v : h.edge(e)) rank += ds.unite(e, m + v) ? 0 : 1;
    }
    CycleClass kind = rank == 0 ? CycleClass::tree : rank == 1 ? CycleClass::unicyclic : CycleClass::multicyclic;
    return {kind, checksum, rank};
}

namespace {

double binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    double r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

class ConditionScan {
public:
    ConditionScan(const Hypergraph& h, std::size_t kappa, std::size_t r)
        : h_(h), kappa_(kappa), need_(kappa * (r - 1) + 1) {
        for (const auto& e : h.edges()) masks_.push_back(BitVec::from_indices(h.v_size(), e));
    }

    ConditionResult run() {
        chosen_.clear();
        result_ = {};
        dfs(0, BitVec(h_.v_size()));
        return result_;
    }

private:
    bool dfs(std::size_t from, const BitVec& span) {
        if (chosen_.size() == kappa_) {
            ++result_.subsets_checked;
            if (span.count() < need_) {
                result_.holds = false;
                result_.violating_edges = chosen_;
                return false;
            }
            return true;
        }
        const std::size_t left = kappa_ - chosen_.size();
        for (std::size_t e = from; e + left <= masks_.size(); ++e) {
            chosen_.push_back(e);
            const bool ok = dfs(e + 1, span | masks_[e]);
            chosen_.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    const Hypergraph& h_;
    std::size_t kappa_;
    std::size_t need_;
    std::vector<BitVec> masks_;
    std::vector<std::size_t> chosen_;
    ConditionResult result_;
};

std::size_t require_uniform(const Hypergraph& h) {
    const auto r = h.uniform_r();
    if (!r) throw std::invalid_argument("hypergraph is not uniform");
    return *r;
}

}  // namespace

ConditionResult satisfies_condition(const Hypergraph& h, std::size_t kappa, std::uint64_t subset_budget) {
    if (kappa == 0) throw std::invalid_argument("kappa must be positive");
    if (h.edge_count() == 0) return {};
    const std::size_t r = require_uniform(h);
    if (h.edge_count() < kappa) return {};
    if (binomial(h.edge_count(), kappa) > static_cast<double>(subset_budget)) {
        throw BudgetExceeded("condition check needs C(" + std::to_string(h.edge_count()) + ", " +
                             std::to_string(kappa) + ") subsets, over the budget");
    }
    ConditionScan scan(h, kappa, r);
    return scan.run();
}

bool check_girth_implies_condition(const Hypergraph& h, std::size_t kappa) {
    const auto g = berge_girth(h);
    if (g && *g < kappa + 1) return true;
    return satisfies_condition(h, kappa).holds;
}

namespace {

/// Edge and vertex sets of the Berge component containing edge e.
void berge_component(const Hypergraph& h, std::size_t e, std::vector<bool>& edges_in, std::vector<bool>& verts_in) {
    edges_in.assign(h.edge_count(), false);
    verts_in.assign(h.v_size(), false);
    std::vector<std::vector<std::size_t>> by_vertex(h.v_size());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
        for (std::size_t v : h.edge(i)) by_vertex[v].push_back(i);
    }
    std::vector<std::size_t> stack{e};
    edges_in[e] = true;
    while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        for (std::size_t v : h.edge(cur)) {
            if (verts_in[v]) continue;
            verts_in[v] = true;
            for (std::size_t other : by_vertex[v]) {
                if (!edges_in[other]) {
                    edges_in[other] = true;
                    stack.push_back(other);
                }
            }
        }
    }
}

}  // namespace

RewireResult rewire(const Hypergraph& h, std::size_t kappa) {
    if (kappa == 0) throw std::invalid_argument("kappa must be positive");
    RewireResult out{h, {}};
    if (h.edge_count() == 0) return out;
    require_uniform(h);
    if (!satisfies_condition(h, kappa).holds) {
        throw std::invalid_argument("rewire precondition failed: the condition does not hold");
    }

    std::size_t guard = 1;
    for (const auto& e : h.edges()) guard += e.size();

    std::vector<std::vector<std::size_t>> edges = h.edges();
    while (true) {
        const Hypergraph cur(h.v_size(), edges);
        const auto cycle = shortest_berge_cycle(cur);
        if (!cycle || cycle->edges.size() > kappa) {
            out.hypergraph = cur;
            return out;
        }
        if (guard-- == 0) throw std::logic_error("rewire did not terminate");

        const std::size_t b = cycle->edges.size();
        std::size_t pos = 0;
        for (std::size_t i = 1; i < b; ++i) {
            if (cycle->edges[i] < cycle->edges[pos]) pos = i;
        }
        const std::size_t e = cycle->edges[pos];
        // the two cycle vertices of e are vertices[pos-1] and vertices[pos]
        const std::size_t v = std::min(cycle->vertices[pos], cycle->vertices[(pos + b - 1) % b]);

        std::vector<bool> comp_edges, comp_verts;
        berge_component(cur, e, comp_edges, comp_verts);
        const auto comp_size = static_cast<std::size_t>(std::count(comp_edges.begin(), comp_edges.end(), true));
        if (comp_size >= kappa) {
            throw std::logic_error("short Berge cycle inside a component with at least kappa edges");
        }

        std::vector<std::size_t> isolated, others;
        for (std::size_t w = 0; w < h.v_size(); ++w) {
            if (comp_verts[w]) continue;
            (cur.degree(w) == 0 ? isolated : others).push_back(w);
        }
        std::optional<std::size_t> chosen;
        for (const auto* list : {&isolated, &others}) {
            for (std::size_t w : *list) {
                auto trial = edges;
                auto& te = trial[e];
                te.erase(std::find(te.begin(), te.end(), v));
                te.push_back(w);
                const Hypergraph cand(h.v_size(), std::move(trial));
                if (satisfies_condition(cand, kappa).holds) {
                    chosen = w;
                    break;
                }
            }
            if (chosen) break;
        }
        if (!chosen) {
            throw std::runtime_error("rewire found no vertex outside the Berge component of a short cycle");
        }
        auto& target = edges[e];
        target.erase(std::find(target.begin(), target.end(), v));
        target.push_back(*chosen);
        std::sort(target.begin(), target.end());
        out.steps.push_back({e, v, *chosen});
    }
}

GeneratorMatrix code_from_bipartite(const BipartiteGraph& g) {
    if (g.a_size() == 0) throw std::invalid_argument("bipartite graph has no information vertices");
    const std::size_t k = g.a_size();
    std::vector<BitVec> rows;
    for (std::size_t u = 0; u < k; ++u) {
        BitVec row(k + g.b_size());
        row.set(u);
        for (std::size_t v : g.neighbors(u)) row.set(k + v);
        rows.push_back(std::move(row));
    }
    return GeneratorMatrix(std::move(rows));
}

std::string to_string(CertifyStatus s) {
    switch (s) {
        case CertifyStatus::certified: return "certified";
        case CertifyStatus::none: return "none";
        case CertifyStatus::unknown: return "unknown";
    }
    return "?";
}

Theorem1Certificate theorem1_certify(const BipartiteGraph& g, std::size_t t, CertifyTarget target,
                                     const CertifyOptions& options) {
    if (t == 0) throw std::invalid_argument("t must be positive");
    const std::size_t need_degree = t - 1;
    const std::size_t need_girth = target == CertifyTarget::batch ? 8 : 6;
    Theorem1Certificate cert;

    auto accept = [&](const std::vector<bool>& keep, const char* strategy) {
        const BipartiteGraph sub = g.induced_on_right(keep);
        if (g.a_size() > 0 && sub.min_left_degree() < need_degree) return false;
        ++cert.evaluations;
        const auto gi = girth(sub);
        if (gi && *gi < need_girth) return false;
        cert.status = CertifyStatus::certified;
        cert.right_subset.clear();
        for (std::size_t v = 0; v < keep.size(); ++v) {
            if (keep[v]) cert.right_subset.push_back(v);
        }
        cert.girth = gi;
        cert.min_left_degree = sub.min_left_degree();
        cert.strategy = strategy;
        return true;
    };

    std::vector<bool> keep(g.b_size(), true);
    if (accept(keep, "full")) return cert;

    // greedy: drop a right vertex on a shortest cycle while degrees allow it
    while (true) {
        const BipartiteGraph sub = g.induced_on_right(keep);
        if (sub.min_left_degree() < need_degree) break;
        const auto cyc = shortest_cycle(sub.as_graph());
        if (cyc.empty() || cyc.size() >= need_girth) break;
        std::vector<std::size_t> right_deg(g.b_size(), 0);
        for (const auto& list : sub.adjacency()) {
            for (std::size_t v : list) ++right_deg[v];
        }
        std::optional<std::size_t> drop;
        for (std::size_t x : cyc) {
            if (x < g.a_size()) continue;
            const std::size_t v = x - g.a_size();
            bool safe = true;
            for (std::size_t u = 0; u < g.a_size() && safe; ++u) {
                const auto& nb = sub.neighbors(u);
                if (std::binary_search(nb.begin(), nb.end(), v) && nb.size() - 1 < need_degree) safe = false;
            }
            if (!safe) continue;
            if (!drop || right_deg[v] < right_deg[*drop] || (right_deg[v] == right_deg[*drop] && v < *drop)) drop = v;
        }
        if (!drop) break;
        keep[*drop] = false;
        if (accept(keep, "greedy")) return cert;
    }

    if (g.b_size() > options.exhaustive_max_right) {
        cert.status = CertifyStatus::unknown;
        cert.strategy = "exhaustive pass skipped: right part too large";
        return cert;
    }
    // exhaustive, largest subsets first, then lexicographic by mask
    const std::size_t b = g.b_size();
    std::vector<std::uint32_t> masks;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << b); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) > std::popcount(y); });
    for (std::uint32_t mask : masks) {
        if (cert.evaluations >= options.evaluation_budget) {
            cert.status = CertifyStatus::unknown;
            cert.strategy = "evaluation budget exhausted";
            return cert;
        }
        for (std::size_t v = 0; v < b; ++v) keep[v] = (mask >> v) & 1U;
        if (accept(keep, "exhaustive")) return cert;
    }
    cert.status = CertifyStatus::none;
    cert.strategy = "exhausted";
    return cert;
}

}  // namespace abatch
