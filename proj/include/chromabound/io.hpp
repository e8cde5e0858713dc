#pragma once

// Text input formats and JSON serialization for reports.
//
// Graph edge list:          Arrangement:
//   # comment                 dim 3
//   n 4                       1 -1 0 0
//   0 1                       1/2 0 -1 3/4
//   1 2                     (n coordinates of the normal, then the offset)
//
// DIMACS .col graphs ("p edge N M", "e u v" 1-based) are also accepted.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chromabound/arrangements.hpp"
#include "chromabound/bounds.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/exactmath.hpp"
#include "chromabound/graphs.hpp"

namespace chromabound::io {

struct ParsedGraph {
    SimpleGraph graph;
    std::vector<std::string> warnings;
};

struct ParsedArrangement {
    Arrangement arrangement{0};
    std::vector<std::string> warnings;
};

using ParsedInput = std::variant<ParsedGraph, ParsedArrangement>;

namespace detail {

inline std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline bool is_blank_or_comment(const std::vector<std::string>& toks) {
    return toks.empty() || toks.front().starts_with("#");
}

inline long long parse_integer(const std::string& s, std::size_t line) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw InputError(at_line(line) + "expected an integer, got '" + s + "'");
    return v;
}

inline std::size_t parse_index(const std::string& s, std::size_t line) {
    const long long v = parse_integer(s, line);
    if (v < 0) throw InputError(at_line(line) + "negative value '" + s + "'");
    return static_cast<std::size_t>(v);
}

inline void add_edge_checked(ParsedGraph& out, std::size_t u, std::size_t v, std::size_t line) {
    if (u == v) throw InputError(at_line(line) + "loop at vertex " + std::to_string(u) + " (graphs must be simple)");
    try {
        if (!out.graph.add_edge(u, v))
            out.warnings.push_back(at_line(line) + "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                   ") collapsed");
    } catch (const InputError& e) {
        throw InputError(at_line(line) + e.what());
    }
}

}  // namespace detail

inline Rational parse_rational(const std::string& s, std::size_t line = 0) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(detail::parse_integer(s, line));
    const BigInt num(detail::parse_integer(s.substr(0, slash), line));
    const BigInt den(detail::parse_integer(s.substr(slash + 1), line));
    if (den == 0) throw InputError(detail::at_line(line) + "zero denominator in '" + s + "'");
    return Rational(num, den);
}

inline ParsedGraph parse_edge_list(std::istream& in) {
    ParsedGraph out;
    bool have_header = false;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto toks = detail::tokens(line);
        if (detail::is_blank_or_comment(toks)) continue;
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "n")
                throw InputError(detail::at_line(lineno) + "expected header 'n <vertex count>'");
            out.graph = SimpleGraph(detail::parse_index(toks[1], lineno));
            have_header = true;
            continue;
        }
        if (toks.size() != 2) throw InputError(detail::at_line(lineno) + "expected an edge 'u v'");
        detail::add_edge_checked(out, detail::parse_index(toks[0], lineno), detail::parse_index(toks[1], lineno),
                                 lineno);
    }
    if (!have_header) throw InputError("missing header 'n <vertex count>'");
    return out;
}

inline ParsedGraph parse_dimacs(std::istream& in) {
    ParsedGraph out;
    bool have_header = false;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto toks = detail::tokens(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header || toks.size() != 4) throw InputError(detail::at_line(lineno) + "malformed 'p edge N M'");
            out.graph = SimpleGraph(detail::parse_index(toks[2], lineno));
            have_header = true;
        } else if (toks[0] == "e") {
            if (!have_header) throw InputError(detail::at_line(lineno) + "edge before 'p' line");
            if (toks.size() != 3) throw InputError(detail::at_line(lineno) + "expected 'e u v'");
            const std::size_t u = detail::parse_index(toks[1], lineno);
            const std::size_t v = detail::parse_index(toks[2], lineno);
            if (u == 0 || v == 0) throw InputError(detail::at_line(lineno) + "DIMACS vertices are 1-based");
            detail::add_edge_checked(out, u - 1, v - 1, lineno);
        } else {
            throw InputError(detail::at_line(lineno) + "unknown DIMACS line type '" + toks[0] + "'");
        }
    }
    if (!have_header) throw InputError("missing DIMACS 'p edge N M' line");
    return out;
}

inline ParsedArrangement parse_arrangement(std::istream& in) {
    ParsedArrangement out;
    bool have_header = false;
    std::size_t dim = 0;
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto toks = detail::tokens(line);
        if (detail::is_blank_or_comment(toks)) continue;
        if (!have_header) {
            if (toks.size() != 2 || toks[0] != "dim")
                throw InputError(detail::at_line(lineno) + "expected header 'dim <ambient dimension>'");
            dim = detail::parse_index(toks[1], lineno);
            out.arrangement = Arrangement(dim);
            have_header = true;
            continue;
        }
        if (toks.size() != dim + 1)
            throw InputError(detail::at_line(lineno) + "expected " + std::to_string(dim + 1) +
                             " numbers (normal then offset), got " + std::to_string(toks.size()));
        std::vector<Rational> normal;
        for (std::size_t i = 0; i < dim; ++i) normal.push_back(parse_rational(toks[i], lineno));
        const Rational offset = parse_rational(toks[dim], lineno);
        try {
            if (!out.arrangement.add(Hyperplane(normal, offset)))
                out.warnings.push_back(detail::at_line(lineno) + "duplicate hyperplane collapsed");
        } catch (const InputError& e) {
            throw InputError(detail::at_line(lineno) + e.what());
        }
    }
    if (!have_header) throw InputError("missing header 'dim <ambient dimension>'");
    return out;
}

/// Dispatches on the first meaningful line: "n" edge list, "p"/"c" DIMACS, "dim" arrangement.
inline ParsedInput parse_input(const std::string& text) {
    std::istringstream probe(text);
    std::string kind;
    for (std::string line; std::getline(probe, line);) {
        const auto toks = detail::tokens(line);
        if (detail::is_blank_or_comment(toks) || toks[0] == "c") continue;
        kind = toks[0];
        break;
    }
    std::istringstream in(text);
    if (kind == "n") return parse_edge_list(in);
    if (kind == "p") return parse_dimacs(in);
    if (kind == "dim") return parse_arrangement(in);
    throw InputError("unrecognized input: expected an 'n', 'p edge' or 'dim' header");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline ParsedInput load_input(const std::string& path) { return parse_input(read_file(path)); }

// ---- JSON -------------------------------------------------------------------

using nlohmann::json;

inline json to_json_array(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

inline std::vector<BigInt> big_ints_from_json(const json& j) {
    std::vector<BigInt> out;
    for (const auto& x : j) out.emplace_back(x.get<std::string>());
    return out;
}

/// Polynomial as ascending coefficient strings.
inline json to_json(const IntPolynomial& p) { return to_json_array(p.coeffs()); }

inline json to_json(const CoeffSequence& s) {
    return {{"n", s.n}, {"m", s.m}, {"r", s.r}, {"a", to_json_array(s.a)}};
}

inline CoeffSequence coeff_sequence_from_json(const json& j) {
    return {j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(), j.at("r").get<std::size_t>(),
            big_ints_from_json(j.at("a"))};
}

inline json to_json(const BoundRecord& r) {
    return {{"q", r.q},
            {"k", r.k},
            {"lower", r.lower.str()},
            {"value", r.value.str()},
            {"upper", r.upper.str()},
            {"ok", r.ok}};
}

inline BoundRecord bound_record_from_json(const json& j) {
    return {j.at("q").get<long long>(),
            j.at("k").get<long long>(),
            BigInt(j.at("lower").get<std::string>()),
            BigInt(j.at("value").get<std::string>()),
            BigInt(j.at("upper").get<std::string>()),
            j.at("ok").get<bool>()};
}

inline json to_json(const BoundsReport& rep) {
    json records = json::array();
    for (const auto& r : rep.records) records.push_back(to_json(r));
    json outside = json::array();
    for (const auto& r : rep.outside) outside.push_back(to_json(r));
    return {{"n", rep.n},         {"m", rep.m},         {"r", rep.r},
            {"q_min", rep.q_min}, {"q_max", rep.q_max}, {"records", records},
            {"outside", outside}};
}

inline BoundsReport bounds_report_from_json(const json& j) {
    BoundsReport rep;
    rep.n = j.at("n").get<std::size_t>();
    rep.m = j.at("m").get<std::size_t>();
    rep.r = j.at("r").get<std::size_t>();
    rep.q_min = j.at("q_min").get<long long>();
    rep.q_max = j.at("q_max").get<long long>();
    for (const auto& r : j.at("records")) rep.records.push_back(bound_record_from_json(r));
    for (const auto& r : j.at("outside")) rep.outside.push_back(bound_record_from_json(r));
    return rep;
}

inline json to_json(const Arrangement& a) {
    json hyps = json::array();
    for (const auto& h : a.hyperplanes()) {
        json normal = json::array();
        for (const auto& c : h.normal()) normal.push_back(c.str());
        hyps.push_back({{"normal", normal}, {"offset", h.offset().str()}});
    }
    return {{"dim", a.ambient_dim()}, {"hyperplanes", hyps}};
}

/// Arrangement in the text input format.
inline std::string format_arrangement(const Arrangement& a) {
    std::string out = "dim " + std::to_string(a.ambient_dim()) + "\n";
    for (const auto& h : a.hyperplanes()) out += h.to_string() + "\n";
    return out;
}

}  // namespace chromabound::io
