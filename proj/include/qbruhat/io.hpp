#pragma once

// Text and JSON forms: path literals "w;w;w|s,s,s,s", JSON records for
// graphs, paths, degree tables and verification reports, and CSV degree
// tables. All numbers that can be fractions are written as exact strings.
// Every top-level JSON document carries a "schema" field; see docs/schemas.md.

#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qbruhat/affine_oracle.hpp"
#include "qbruhat/degree.hpp"
#include "qbruhat/qbg.hpp"
#include "qbruhat/qls.hpp"

namespace qbruhat::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kQbgSchema = "qbruhat.qbg/1";
inline constexpr const char* kQlsSchema = "qbruhat.qls/1";
inline constexpr const char* kDegreeSchema = "qbruhat.degree/1";
inline constexpr const char* kVerifySchema = "qbruhat.verify/1";

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

template <class T, class F>
std::string join(const std::vector<T>& items, std::string_view sep, F&& fmt) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += fmt(items[i]);
    }
    return out;
}

}  // namespace detail

/// Comma-separated nonnegative multiplicities, e.g. "2,1".
inline IntVec parse_multiplicities(std::string_view text) {
    IntVec out;
    for (auto tok : detail::split(text, ',')) {
        tok = detail::trim(tok);
        if (tok.empty()) throw InvalidInput("empty entry in '" + std::string(text) + "'");
        Rational r = Rational::parse(tok);
        if (!r.is_integer()) throw InvalidInput("multiplicity '" + std::string(tok) + "' is not an integer");
        out.push_back(r.num());
    }
    return out;
}

/// Comma-separated 1-based node numbers; empty text is the empty set.
inline NodeMask parse_nodes(std::string_view text, int rank) {
    NodeMask J = 0;
    text = detail::trim(text);
    if (text.empty() || text == "{}" || text == "none") return J;
    for (auto tok : detail::split(text, ',')) {
        Rational r = Rational::parse(detail::trim(tok));
        if (!r.is_integer() || r.num() < 1 || r.num() > rank)
            throw InvalidInput("node '" + std::string(detail::trim(tok)) + "' out of range 1.." + std::to_string(rank));
        J |= NodeMask{1} << (r.num() - 1);
    }
    return J;
}

inline std::vector<int> nodes_list(NodeMask J, int rank) {
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
        if (has_node(J, i)) out.push_back(i + 1);
    return out;
}

inline Vertex parse_direction(const PQBG& g, std::string_view word) {
    ElementId w = parse_word(g.group(), detail::trim(word), WordCheck::Reduced);
    auto v = g.vertex_of(w);
    if (!v)
        throw InvalidInput("'" + std::string(detail::trim(word)) + "' is not a minimal coset representative for J = " +
                           format_nodes(g.cosets().J(), g.roots().rank()));
    return *v;
}

/// "r2;r2 r1;r1|0,1/2,2/3,1" -> path. Words accept s/r prefixes, bare numbers, "e" and "w0".
inline QLSPath parse_path_literal(std::string_view text, const PQBG& g) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
        throw InvalidInput("path literal needs exactly one '|' between directions and times");
    QLSPath p;
    for (auto w : detail::split(text.substr(0, bar), ';')) p.dirs.push_back(parse_direction(g, w));
    for (auto t : detail::split(text.substr(bar + 1), ',')) p.times.push_back(Rational::parse(detail::trim(t)));
    if (auto err = structural_error(p, g.num_vertices())) throw InvalidInput(*err);
    return p;
}

inline std::string format_path_literal(const QLSPath& p, const PQBG& g) {
    return detail::join(p.dirs, ";", [&](Vertex v) { return format_word(g.group(), g.element(v)); }) + "|" +
           detail::join(p.times, ",", [](const Rational& r) { return r.str(); });
}

inline Json path_json(const QLSPath& p, const PQBG& g) {
    Json dirs = Json::array(), times = Json::array();
    for (auto v : p.dirs) dirs.push_back(format_word(g.group(), g.element(v)));
    for (const auto& t : p.times) times.push_back(t.str());
    return Json{{"dirs", dirs}, {"times", times}};
}

inline QLSPath path_from_json(const Json& j, const PQBG& g) {
    if (!j.is_object() || !j.contains("dirs") || !j.contains("times") || !j["dirs"].is_array() ||
        !j["times"].is_array())
        throw InvalidInput("path record needs array fields \"dirs\" and \"times\"");
    QLSPath p;
    for (const auto& w : j["dirs"]) {
        if (!w.is_string()) throw InvalidInput("directions must be strings");
        p.dirs.push_back(parse_direction(g, w.get<std::string>()));
    }
    for (const auto& t : j["times"]) {
        if (t.is_string())
            p.times.push_back(Rational::parse(t.get<std::string>()));
        else if (t.is_number_integer())
            p.times.push_back(Rational(t.get<std::int64_t>()));
        else
            throw InvalidInput("times must be fraction strings");
    }
    if (auto err = structural_error(p, g.num_vertices())) throw InvalidInput(*err);
    return p;
}

/// Literal or JSON record, chosen by the first non-blank character.
inline QLSPath parse_path(std::string_view text, const PQBG& g) {
    auto t = detail::trim(text);
    if (!t.empty() && t.front() == '{') {
        Json j = Json::parse(t, nullptr, false);
        if (j.is_discarded()) throw InvalidInput("malformed JSON path record");
        return path_from_json(j, g);
    }
    return parse_path_literal(t, g);
}

inline Json header(const char* schema, const PQBG& g, const LevelZeroShape& shape) {
    const int n = g.roots().rank();
    return Json{{"schema", schema},
                {"type", g.roots().type().name()},
                {"lambda", shape.multiplicities},
                {"parabolic", nodes_list(g.cosets().J(), n)}};
}

inline Json graph_json(const PQBG& g, const LevelZeroShape& shape) {
    const auto& rs = g.roots();
    Json j = header(kQbgSchema, g, shape);
    Json vertices = Json::array();
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        vertices.push_back(
            {{"id", v}, {"word", format_word(g.group(), g.element(v))}, {"length", g.group().length(g.element(v))}});
    Json edges = Json::array();
    for (const auto& e : g.edges())
        edges.push_back({{"source", e.source},
                         {"target", e.target},
                         {"label", e.label + 1},
                         {"root", rs.root(e.label).coords},
                         {"kind", to_string(e.kind)},
                         {"pairing", pair(shape.classical, rs.coroot(e.label))}});
    j["counts"] = {{"vertices", g.num_vertices()},
                   {"edges", g.edges().size()},
                   {"bruhat", g.count(EdgeKind::Bruhat)},
                   {"quantum", g.count(EdgeKind::Quantum)}};
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    return j;
}

inline Json paths_json(const std::vector<QLSPath>& paths, const PQBG& g, const LevelZeroShape& shape,
                       Variant variant) {
    Json j = header(kQlsSchema, g, shape);
    j["variant"] = to_string(variant);
    j["count"] = paths.size();
    Json arr = Json::array();
    for (const auto& p : paths) arr.push_back(path_json(p, g));
    j["paths"] = std::move(arr);
    return j;
}

inline Json degree_json(const std::vector<DegreeRow>& rows, const PQBG& g, const LevelZeroShape& shape) {
    Json j = header(kDegreeSchema, g, shape);
    j["count"] = rows.size();
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json row = path_json(r.path, g);
        row["energies"] = r.energies;
        row["degree"] = r.degree;
        arr.push_back(std::move(row));
    }
    j["rows"] = std::move(arr);
    return j;
}

/// Header "dirs,times,energies,degree"; fields use ';' and ' ' internally so no quoting is needed.
inline void write_degree_csv(std::ostream& os, const std::vector<DegreeRow>& rows, const PQBG& g) {
    os << "dirs,times,energies,degree\n";
    for (const auto& r : rows) {
        os << detail::join(r.path.dirs, ";", [&](Vertex v) { return format_word(g.group(), g.element(v)); }) << ','
           << detail::join(r.path.times, " ", [](const Rational& t) { return t.str(); }) << ','
           << detail::join(r.energies, " ", [](Int e) { return std::to_string(e); }) << ',' << r.degree << '\n';
    }
}

struct PathCheck {
    QLSPath path;
    LSVerification ls;
    Int degree = 0;
    Int endpoint_delta = 0;
    bool agree = true;
};

struct VerifyReport {
    Int window = 0;
    CoverReport covers;
    std::size_t hat_count = 0;
    std::size_t tilde_count = 0;
    bool hat_equals_tilde = true;
    std::vector<PathCheck> paths;

    std::size_t failures() const {
        std::size_t n = covers.mismatches.size() + (hat_equals_tilde ? 0 : 1);
        for (const auto& p : paths) n += (p.ls.verdict == Verdict::Fail) + !p.agree;
        return n;
    }
    std::size_t inconclusive() const {
        std::size_t n = 0;
        for (const auto& p : paths) n += p.ls.verdict == Verdict::Inconclusive;
        return n;
    }
};

inline Json verify_json(const VerifyReport& r, const PQBG& g, const LevelZeroShape& shape) {
    Json j = header(kVerifySchema, g, shape);
    j["window"] = r.window;
    j["status"] = r.failures() ? "fail" : (r.inconclusive() ? "inconclusive" : "pass");
    j["covers"] = {{"covers", r.covers.covers},
                   {"edges", r.covers.edges},
                   {"edge_checks", r.covers.edge_checks},
                   {"skipped", r.covers.skipped},
                   {"mismatches", r.covers.mismatches}};
    j["qls"] = {{"hat", r.hat_count}, {"tilde", r.tilde_count}, {"equal", r.hat_equals_tilde}};
    Json arr = Json::array();
    for (const auto& p : r.paths) {
        Json row = path_json(p.path, g);
        row["verdict"] = to_string(p.ls.verdict);
        if (p.ls.verdict != Verdict::Pass) {
            row["pair"] = p.ls.pair;
            row["reason"] = p.ls.reason;
        }
        row["degree"] = p.degree;
        row["endpoint_delta"] = p.endpoint_delta;
        row["agree"] = p.agree;
        arr.push_back(std::move(row));
    }
    j["paths"] = std::move(arr);
    return j;
}

}  // namespace qbruhat::io
