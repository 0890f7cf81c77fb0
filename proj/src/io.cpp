#include <abatch/io.hpp>

#include <sstream>

namespace abatch {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool looks_like_json(const std::string& text) {
    const auto p = text.find_first_not_of(" \t\r\n");
    return p != std::string::npos && (text[p] == '{' || text[p] == '[');
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // byte offset to line number
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n' ? 1 : 0;
        throw ParseError(std::string("invalid JSON: ") + e.what(), line);
    }
}

Json one_based(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (std::size_t x : v) out.push_back(x + 1);
    return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

GeneratorMatrix parse_matrix_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::vector<BitVec> rows;
    std::size_t width = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        std::string bits;
        for (char c : line) {
            if (c == ' ' || c == '\t') continue;
            if (c != '0' && c != '1') {
                throw ParseError(std::string("unexpected character '") + c + "' in matrix row", line_no);
            }
            bits.push_back(c);
        }
        if (!rows.empty() && bits.size() != width) {
            throw ParseError("row has " + std::to_string(bits.size()) + " entries, expected " + std::to_string(width),
                             line_no);
        }
        width = bits.size();
        rows.push_back(BitVec::from_string(bits));
    }
    if (rows.empty()) throw ParseError("matrix has no rows", line_no);
    try {
        return GeneratorMatrix(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string matrix_to_text(const GeneratorMatrix& g) {
    std::string out;
    for (const BitVec& row : g.rows()) out += row.to_string() + "\n";
    return out;
}

GeneratorMatrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
        throw ParseError("matrix JSON needs a \"rows\" array", 0);
    }
    std::vector<BitVec> rows;
    for (const auto& r : j["rows"]) {
        if (!r.is_string()) throw ParseError("matrix rows must be strings", 0);
        try {
            rows.push_back(BitVec::from_string(r.get<std::string>()));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("matrix row ") + std::to_string(rows.size() + 1) + ": " + e.what(), 0);
        }
    }
    if (rows.empty()) throw ParseError("matrix has no rows", 0);
    try {
        GeneratorMatrix g(std::move(rows));
        if (j.contains("k") && j["k"].get<std::size_t>() != g.k()) throw ParseError("\"k\" disagrees with rows", 0);
        if (j.contains("n") && j["n"].get<std::size_t>() != g.n()) throw ParseError("\"n\" disagrees with rows", 0);
        return g;
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what(), 0);
    }
}

Json matrix_to_json(const GeneratorMatrix& g) {
    Json rows = Json::array();
    for (const BitVec& row : g.rows()) rows.push_back(row.to_string());
    return {{"k", g.k()}, {"n", g.n()}, {"rows", rows}};
}

GeneratorMatrix read_matrix(const std::string& text) {
    if (!looks_like_json(text)) return parse_matrix_text(text);
    const Json j = parse_json(text);
    if (j.is_object() && j.contains("code")) return matrix_from_json(j["code"]);
    return matrix_from_json(j);
}

Hypergraph parse_hypergraph_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> eta, m, r;
    std::vector<std::vector<std::size_t>> edges;
    auto read_numbers = [&](const std::string& line) {
        std::istringstream ls(line);
        std::vector<std::size_t> out;
        std::string tok;
        while (ls >> tok) {
            std::size_t pos = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(tok, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != tok.size() || tok.front() == '-') throw ParseError("expected a number, got '" + tok + "'", line_no);
            out.push_back(static_cast<std::size_t>(v));
        }
        return out;
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto nums = read_numbers(line);
        if (!eta) {
            if (nums.size() < 2 || nums.size() > 3) throw ParseError("header must be \"eta m [r]\"", line_no);
            eta = nums[0];
            m = nums[1];
            if (nums.size() == 3) r = nums[2];
            continue;
        }
        std::vector<std::size_t> edge;
        for (std::size_t v : nums) {
            if (v < 1 || v > *eta) {
                throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(*eta), line_no);
            }
            edge.push_back(v - 1);
        }
        if (r && edge.size() != *r) {
            throw ParseError("edge has " + std::to_string(edge.size()) + " vertices, expected " + std::to_string(*r),
                             line_no);
        }
        std::vector<std::size_t> sorted = edge;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw ParseError("edge repeats a vertex", line_no);
        }
        if (edge.empty()) throw ParseError("empty edge", line_no);
        edges.push_back(std::move(edge));
    }
    if (!eta) throw ParseError("missing header line", line_no);
    if (edges.size() != *m) {
        throw ParseError("header announces " + std::to_string(*m) + " edges, found " + std::to_string(edges.size()),
                         line_no);
    }
    return Hypergraph(*eta, std::move(edges));
}

std::string hypergraph_to_text(const Hypergraph& h) {
    std::string out = std::to_string(h.v_size()) + " " + std::to_string(h.edge_count());
    if (const auto r = h.uniform_r()) out += " " + std::to_string(*r);
    out += "\n";
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) out += (i ? " " : "") + std::to_string(e[i] + 1);
        out += "\n";
    }
    return out;
}

BipartiteGraph bipartite_from_json(const Json& j) {
    try {
        const std::size_t a = j.at("a").get<std::size_t>();
        const std::size_t b = j.at("b").get<std::size_t>();
        std::vector<std::vector<std::size_t>> adj;
        for (const auto& list : j.at("adj")) {
            std::vector<std::size_t> row;
            for (const auto& v : list) {
                const std::size_t x = v.get<std::size_t>();
                if (x < 1 || x > b) throw ParseError("right index " + std::to_string(x) + " outside 1..b", 0);
                row.push_back(x - 1);
            }
            adj.push_back(std::move(row));
        }
        return BipartiteGraph(a, b, std::move(adj));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad bipartite JSON: ") + e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

Json bipartite_to_json(const BipartiteGraph& g) {
    Json adj = Json::array();
    for (const auto& list : g.adjacency()) adj.push_back(one_based(list));
    return {{"a", g.a_size()}, {"b", g.b_size()}, {"adj", adj}};
}

BipartiteGraph read_bipartite(const std::string& text) {
    const Json j = parse_json(text);
    if (j.is_object() && j.contains("graph")) return bipartite_from_json(j["graph"]);
    return bipartite_from_json(j);
}

Json query_to_json(const Query& q) { return one_based(q.indices); }

Json assignment_to_json(const RecoveryAssignment& a) {
    Json out = Json::array();
    for (const RecoverySet& s : a.sets) {
        out.push_back({{"target", s.target + 1}, {"coords", one_based(s.coords.indices())}});
    }
    return out;
}

Json cost_to_json(const CostInfo& c) {
    return {{"query_space", c.query_space},
            {"queries_checked", c.queries_checked},
            {"nodes", c.nodes},
            {"over_budget", c.over_budget},
            {"max_set_size", c.max_set_size}};
}

Json batch_result_to_json(const BatchResult& r, std::size_t t) {
    Json out{{"property", "batch"}, {"t", t}, {"verdict", to_string(r.verdict)}, {"holds", r.holds()},
             {"cost", cost_to_json(r.cost)}};
    if (r.counterexample) out["counterexample"] = {{"query", query_to_json(*r.counterexample)}};
    return out;
}

Json pir_result_to_json(const PirResult& r, std::size_t t) {
    Json out{{"property", "pir"}, {"t", t}, {"verdict", to_string(r.verdict)}, {"holds", r.holds()},
             {"cost", cost_to_json(r.cost)}};
    if (r.counterexample) out["counterexample"] = {{"symbol", *r.counterexample + 1}};
    return out;
}

Json async_result_to_json(const AsyncResult& r, std::size_t t) {
    Json out{{"property", "async"}, {"t", t}, {"mode", to_string(r.mode)}, {"verdict", to_string(r.verdict)},
             {"holds", r.holds()}, {"cost", cost_to_json(r.cost)}};
    if (r.batch_counterexample) out["batch_counterexample"] = {{"query", query_to_json(*r.batch_counterexample)}};
    if (r.witness) {
        out["witness"] = {{"query", query_to_json(r.witness->query)},
                          {"assignment", assignment_to_json(r.witness->assignment)},
                          {"completed_position", r.witness->completed_position + 1},
                          {"newcomer", r.witness->newcomer + 1}};
    }
    return out;
}

Json certificate_to_json(const Theorem1Certificate& c) {
    Json out{{"status", to_string(c.status)},
             {"strategy", c.strategy},
             {"evaluations", c.evaluations},
             {"min_left_degree", c.min_left_degree}};
    if (c.status == CertifyStatus::certified) {
        out["right_subset"] = one_based(c.right_subset);
        out["girth"] = c.girth ? Json(*c.girth) : Json("infinite");
    }
    return out;
}

Json report_to_json(const CodeReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"t", r.t},
            {"rho", r.rho},
            {"family", r.family},
            {"certified_by", r.certified_by},
            {"girth", r.girth ? Json(*r.girth) : Json("infinite")},
            {"berge_girth", r.berge_girth ? Json(*r.berge_girth) : Json(nullptr)}};
}

Json hypergraph_to_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (const auto& e : h.edges()) edges.push_back(one_based(e));
    return {{"eta", h.v_size()}, {"edges", edges}};
}

Json search_to_json(const ExtremalSearch& s, std::size_t eta, std::size_t r, std::size_t kappa) {
    return {{"eta", eta},   {"r", r},           {"kappa", kappa}, {"value", s.value},
            {"exact", s.exact}, {"nodes", s.nodes}, {"witness", hypergraph_to_json(s.witness)}};
}

Json extremal_to_json(const ExtremalResult& r) {
    Json out{{"eta", r.eta},
             {"r", r.r},
             {"kappa", r.kappa},
             {"B", r.b.value},
             {"F", r.f.value},
             {"exact", r.exact()},
             {"nodes", r.nodes()},
             {"equal", r.equal()},
             {"witness_B", hypergraph_to_json(r.b.witness)},
             {"witness_F", hypergraph_to_json(r.f.witness)},
             {"rewire_ok", r.rewire_ok},
             {"rewire_note", r.rewire_note}};
    if (r.rewired) out["rewired_F"] = hypergraph_to_json(*r.rewired);
    return out;
}

Json redundancy_row_to_json(const RedundancyRow& row) {
    return {{"k", row.k},
            {"rho", row.rho},
            {"construction", row.construction},
            {"two_sqrt_k", row.lower_bound},
            {"sqrt_2k", row.rao_vardy},
            {"ratio", row.ratio},
            {"tight", row.tight}};
}

}  // namespace abatch
