#pragma once

// Text formats and JSON rendering.
//
// Matrix files: optional '#' comment lines, then one line of '0'/'1'
// characters per row, all lines the same length.
//
// Graph files: optional '#' comment lines, a header line "n m", then m lines
// "u v" with 1 <= u < v <= n.

#include <istream>
#include <json.hpp>

#include "circmat/verify.hpp"

namespace circmat {

// Malformed input text; `line` is the 1-based offending line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_) : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

namespace detail {

inline std::string trimmed(std::string s) {
    const auto notSpace = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), notSpace));
    s.erase(std::find_if(s.rbegin(), s.rend(), notSpace).base(), s.end());
    return s;
}

}  // namespace detail

inline BinaryMatrix parse_matrix(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    int lineNo = 0, firstRowLine = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string s = detail::trimmed(line);
        if (s.empty() || s.front() == '#') continue;
        if (s.find_first_not_of("01") != std::string::npos) throw ParseError(lineNo, "matrix rows may contain only 0/1");
        if (rows.empty()) firstRowLine = lineNo;
        if (!rows.empty() && s.size() != rows.front().size()) throw ParseError(lineNo, "matrix rows must have equal length");
        rows.push_back(s);
    }
    if (rows.empty()) throw ParseError(lineNo, "no matrix rows found");
    if (static_cast<int>(rows.front().size()) > kMaxCols) throw ParseError(firstRowLine, "too many columns (limit 62)");
    return BinaryMatrix::from_strings(rows);
}

inline Graph parse_graph(std::istream& in) {
    std::string line;
    int lineNo = 0;
    int n = -1, m = -1;
    Graph g;
    int edgesRead = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string s = detail::trimmed(line);
        if (s.empty() || s.front() == '#') continue;
        std::istringstream ls(s);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 1 || m < 0 || n > kMaxVertices) throw ParseError(lineNo, "expected header 'n m'");
            std::string rest;
            if (ls >> rest) throw ParseError(lineNo, "trailing tokens after header");
            g = Graph(n);
            continue;
        }
        int u = 0, v = 0;
        if (!(ls >> u >> v)) throw ParseError(lineNo, "expected edge 'u v'");
        std::string rest;
        if (ls >> rest) throw ParseError(lineNo, "trailing tokens after edge");
        if (u < 1 || v < 1 || u > n || v > n || u >= v) throw ParseError(lineNo, "edges must satisfy 1 <= u < v <= n");
        if (g.adjacent(u, v)) throw ParseError(lineNo, "duplicate edge");
        g.add_edge(u, v);
        ++edgesRead;
    }
    if (n < 0) throw ParseError(lineNo, "no graph header found");
    if (edgesRead != m) throw ParseError(lineNo, "edge count does not match header");
    return g;
}

inline nlohmann::json witness_json(const ConfigWitness& w) {
    return {{"rowMap", w.rowMap}, {"colMap", w.colMap}};
}

inline nlohmann::json family_json(const FamilyId& id) {
    nlohmann::json j{{"family", id.base_name()}};
    if (id.k > 0) j["k"] = id.k;
    if (!id.mask.empty()) j["mask"] = to_string(id.mask);
    return j;
}

inline nlohmann::json certificate_json(const FamilyId& id, const ConfigWitness& w) {
    nlohmann::json j = family_json(id);
    j["rowMap"] = w.rowMap;
    j["colMap"] = w.colMap;
    return j;
}

inline nlohmann::json report_json(const LemmaReport& r) {
    return {
        {"lemma", r.lemma},       {"cases", r.cases},         {"failures", r.failureCount},
        {"pass", r.passed()},     {"examples", r.failures},   {"notes", r.notes},
        {"elapsedMs", r.elapsedMs},
    };
}

}  // namespace circmat
