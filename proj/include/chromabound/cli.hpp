#pragma once

// Command implementations behind the chromabound executable. Each command
// returns a CommandOutput so it can be driven from tests without a process.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chromabound/arrangements.hpp"
#include "chromabound/bounds.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/graphs.hpp"
#include "chromabound/io.hpp"
#include "chromabound/nbc.hpp"
#include "chromabound/verify.hpp"

namespace chromabound::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kInputError = 2, kResourceCap = 3 };

enum class Format { Text, Json };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    long long q_min = -3;
    long long q_max = 3;
    std::optional<long long> k_cap;
    long long probe_outside = 0;
    std::size_t cap_subsets = kDefaultSubsetGuard;
    std::uint64_t cap_colorings = kDefaultColoringCap;
    std::uint64_t seed = 42;
    Format format = Format::Text;
    std::optional<std::vector<std::size_t>> order;
    std::size_t k0 = 0;
    VerifyConfig verify;

    void validate() const {
        if (q_min > q_max) throw InputError("--q-min must not exceed --q-max");
        if (cap_subsets == 0 || cap_colorings == 0) throw InputError("caps must be positive");
    }
};

struct CommandOutput {
    nlohmann::json report;  // {command, config, results, violations}
    std::string text;
    std::vector<std::string> warnings;
    int exit_code = kOk;

    std::string render(Format f) const { return f == Format::Json ? report.dump(2) + "\n" : text; }
};

namespace detail {

inline nlohmann::json config_json(const RunConfig& c) {
    nlohmann::json j = {{"inputs", c.inputs},
                        {"q_window", {c.q_min, c.q_max}},
                        {"cap_subsets", c.cap_subsets},
                        {"cap_colorings", c.cap_colorings},
                        {"seed", c.seed}};
    if (c.k_cap) j["k_cap"] = *c.k_cap;
    if (c.probe_outside > 0) j["probe_outside"] = c.probe_outside;
    if (c.order) j["order"] = *c.order;
    return j;
}

inline CommandOutput start(const RunConfig& c) {
    CommandOutput out;
    out.report = {{"command", c.command},
                  {"config", config_json(c)},
                  {"results", nlohmann::json::object()},
                  {"violations", nlohmann::json::array()}};
    return out;
}

inline const std::string& single_input(const RunConfig& c) {
    if (c.inputs.size() != 1) throw InputError(c.command + ": expected exactly one input file");
    return c.inputs.front();
}

/// Polynomial plus the hyperplane count, from either kind of input.
struct Subject {
    std::string kind;
    IntPolynomial chi;
    std::size_t m = 0;
    Arrangement arrangement{0};
};

inline Subject load_subject(const RunConfig& c, CommandOutput& out) {
    auto parsed = io::load_input(single_input(c));
    Subject s;
    if (auto* g = std::get_if<io::ParsedGraph>(&parsed)) {
        out.warnings = g->warnings;
        s.kind = "graph";
        s.chi = chromatic_poly(g->graph);
        s.m = g->graph.edge_count();
        s.arrangement = graphic_arrangement(g->graph);
    } else {
        auto& a = std::get<io::ParsedArrangement>(parsed);
        out.warnings = a.warnings;
        s.kind = "arrangement";
        s.arrangement = a.arrangement;
        s.chi = char_poly(a.arrangement, c.cap_subsets);
        s.m = a.arrangement.size();
    }
    return s;
}

inline std::string join(const std::vector<BigInt>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
    return out;
}

}  // namespace detail

inline CommandOutput cmd_chromatic(const RunConfig& c) {
    auto out = detail::start(c);
    auto parsed = io::load_input(detail::single_input(c));
    auto* pg = std::get_if<io::ParsedGraph>(&parsed);
    if (!pg) throw InputError("chromatic: input is an arrangement; use 'bounds' for arrangements");
    out.warnings = pg->warnings;
    const SimpleGraph& g = pg->graph;
    const auto chi = chromatic_poly(g);
    const auto info = rank_info(g);
    const auto seq = coeff_sequence(chi, g.edge_count());
    out.report["results"] = {{"polynomial", chi.to_string()},
                             {"coefficients", io::to_json(chi)},
                             {"n", g.vertex_count()},
                             {"m", g.edge_count()},
                             {"c", info.components},
                             {"r", info.rank},
                             {"sequence", io::to_json(seq)}};
    std::ostringstream t;
    t << chi.to_string() << "\n"
      << "n=" << g.vertex_count() << " m=" << g.edge_count() << " c=" << info.components << " r=" << info.rank
      << "\n"
      << "a = [" << detail::join(seq.a) << "]\n";
    out.text = t.str();
    return out;
}

inline CommandOutput cmd_bounds(const RunConfig& c) {
    auto out = detail::start(c);
    const auto subject = detail::load_subject(c, out);
    const auto seq = coeff_sequence(subject.chi, subject.m);
    const auto report = verify_theorem2(seq, c.q_min, c.q_max, {c.k_cap, c.probe_outside});
    out.report["results"] = {{"input", subject.kind},
                             {"polynomial", subject.chi.to_string()},
                             {"sequence", io::to_json(seq)},
                             {"bounds", io::to_json(report)},
                             {"all_tight", report.all_tight()}};
    for (const auto& v : report.violations()) out.report["violations"].push_back(io::to_json(v));

    std::ostringstream t;
    t << subject.kind << ": " << subject.chi.to_string() << "\n"
      << "n=" << seq.n << " m=" << seq.m << " r=" << seq.r << " a = [" << detail::join(seq.a) << "]\n"
      << "q\tk\tlower\tvalue\tupper\tok\n";
    for (const auto& r : report.records)
        t << r.q << '\t' << r.k << '\t' << r.lower << '\t' << r.value << '\t' << r.upper << '\t'
          << (r.ok ? (r.tight() ? "tight" : "ok") : "VIOLATION") << '\n';
    for (const auto& r : report.outside)
        t << r.q << '\t' << r.k << '\t' << r.lower << '\t' << r.value << '\t' << r.upper << '\t'
          << (r.ok ? "outside-range holds" : "outside-range fails") << '\n';
    t << report.records.size() << " records, " << report.violations().size() << " violations"
      << (report.all_tight() ? ", all tight" : "") << "\n";
    out.text = t.str();
    out.exit_code = report.all_ok() ? kOk : kVerificationFailure;
    return out;
}

inline CommandOutput cmd_nbc(const RunConfig& c) {
    auto out = detail::start(c);
    const auto subject = detail::load_subject(c, out);
    const auto& a = subject.arrangement;
    const auto order = c.order ? GroundOrder(*c.order) : GroundOrder::natural(a.size());
    if (order.size() != a.size())
        throw InputError("--order lists " + std::to_string(order.size()) + " indices but the input has " +
                         std::to_string(a.size()) + " hyperplanes");
    const auto seq = coeff_sequence(subject.chi, subject.m);
    const auto counts = nbc_counts(a, order, c.cap_subsets);
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream t;
    t << "k\tnbc\t|a_k|\n";
    bool all_equal = true;
    for (std::size_t k = 0; k <= seq.r; ++k) {
        const bool eq = counts[k] == seq.a[k];
        all_equal = all_equal && eq;
        rows.push_back({{"k", k}, {"nbc", counts[k].str()}, {"a_k", seq.a[k].str()}, {"equal", eq}});
        t << k << '\t' << counts[k] << '\t' << seq.a[k] << (eq ? "" : "\tMISMATCH") << '\n';
        if (!eq) out.report["violations"].push_back("k=" + std::to_string(k));
    }
    for (std::size_t k = seq.r + 1; k < counts.size(); ++k)
        if (counts[k] != 0) {
            all_equal = false;
            out.report["violations"].push_back("k=" + std::to_string(k) + " beyond rank");
        }
    out.report["results"] = {{"input", subject.kind},
                             {"order", order.sequence()},
                             {"rows", rows},
                             {"equal", all_equal}};
    out.text = t.str();
    out.exit_code = all_equal ? kOk : kVerificationFailure;
    return out;
}

inline CommandOutput cmd_decone(const RunConfig& c) {
    auto out = detail::start(c);
    const auto subject = detail::load_subject(c, out);
    const auto& a = subject.arrangement;
    if (!a.is_linear()) throw InputError("decone: arrangement is not linear; every offset must be 0");
    if (c.k0 >= a.size())
        throw InputError("decone: --k0 " + std::to_string(c.k0) + " out of range for " + std::to_string(a.size()) +
                         " hyperplanes");
    const auto deconed = decone(a, c.k0);
    const auto chi_d = char_poly(deconed, c.cap_subsets);
    const auto target = delta(subject.chi);
    const bool holds = chi_d == target;
    out.report["results"] = {{"k0", c.k0},
                             {"deconed", io::to_json(deconed)},
                             {"chi", subject.chi.to_string()},
                             {"chi_deconed", chi_d.to_string()},
                             {"delta_chi", target.to_string()},
                             {"holds", holds}};
    if (!holds) out.report["violations"].push_back("chi(dA) != Delta chi(A)");
    std::ostringstream t;
    t << io::format_arrangement(deconed) << "chi(A)      = " << subject.chi.to_string() << "\n"
      << "chi(dA)     = " << chi_d.to_string() << "\n"
      << "Delta chi(A) = " << target.to_string() << "\n"
      << (holds ? "identity holds" : "IDENTITY FAILS") << "\n";
    out.text = t.str();
    out.exit_code = holds ? kOk : kVerificationFailure;
    return out;
}

inline CommandOutput cmd_verify(const RunConfig& c) {
    auto out = detail::start(c);
    VerifyConfig vc = c.verify;
    vc.seed = c.seed;
    vc.q_min = c.q_min;
    vc.q_max = c.q_max;
    vc.subset_guard = c.cap_subsets;
    vc.coloring_cap = c.cap_colorings;
    const auto result = run_verify(vc);
    out.report["config"] = to_json(vc);
    out.report["results"] = to_json(result);
    out.report["violations"] = result.violations;
    std::ostringstream t;
    t << result.graph_count << " graphs, " << result.arrangement_count << " arrangements, " << result.total_checks()
      << " checks\n";
    for (const auto& [name, tally] : result.checks)
        t << "  " << name << ": " << tally.checked << " checked, " << tally.failed << " failed\n";
    t << "  logconcave (diagnostic): " << result.logconcave.checked - result.logconcave.failed << "/"
      << result.logconcave.checked << "\n";
    for (const auto& v : result.violations) t << "VIOLATION " << v << "\n";
    t << result.violations.size() << " violations\n";
    out.text = t.str();
    out.exit_code = result.ok() ? kOk : kVerificationFailure;
    return out;
}

/// Runs the command named in c.command, mapping library errors to exit codes.
/// On error the returned text holds the message and the report is empty.
inline CommandOutput dispatch(const RunConfig& c) {
    try {
        c.validate();
        if (c.command == "chromatic") return cmd_chromatic(c);
        if (c.command == "bounds") return cmd_bounds(c);
        if (c.command == "nbc") return cmd_nbc(c);
        if (c.command == "decone") return cmd_decone(c);
        if (c.command == "verify") return cmd_verify(c);
        throw InputError("unknown command '" + c.command + "'");
    } catch (const ResourceLimitError& e) {
        return {{}, std::string("error: ") + e.what() + "\n", {}, kResourceCap};
    } catch (const InputError& e) {
        return {{}, std::string("error: ") + e.what() + "\n", {}, kInputError};
    } catch (const ValidationError& e) {
        return {{}, std::string("error: ") + e.what() + "\n", {}, kInputError};
    } catch (const PreconditionError& e) {
        return {{}, std::string("error: ") + e.what() + "\n", {}, kInputError};
    }
}

}  // namespace chromabound::cli
