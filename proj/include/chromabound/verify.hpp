#pragma once

// Seeded property sweep over every cross-check the library supports.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chromabound/arrangements.hpp"
#include "chromabound/bounds.hpp"
#include "chromabound/corpus.hpp"
#include "chromabound/exactmath.hpp"
#include "chromabound/graphs.hpp"
#include "chromabound/nbc.hpp"

namespace chromabound {

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::size_t graphs = 200;
    std::size_t max_n = 6;
    std::size_t arrangements = 50;
    std::size_t max_dim = 4;
    std::size_t max_m = 7;
    long long q_min = -5;
    long long q_max = 5;
    std::size_t orders = 3;
    /// NBC sweeps skip instances with more hyperplanes than this.
    std::size_t nbc_max_m = 12;
    std::size_t subset_guard = kDefaultSubsetGuard;
    std::uint64_t coloring_cap = kDefaultColoringCap;
    bool include_named = true;
};

struct CheckTally {
    std::size_t checked = 0;
    std::size_t failed = 0;
};

struct VerifyResult {
    std::size_t graph_count = 0;
    std::size_t arrangement_count = 0;
    std::map<std::string, CheckTally> checks;
    std::vector<std::string> violations;
    /// Log-concavity is tracked as a diagnostic, never as a violation.
    CheckTally logconcave;

    std::size_t total_checks() const {
        std::size_t t = 0;
        for (const auto& [_, c] : checks) t += c.checked;
        return t;
    }
    bool ok() const { return violations.empty(); }
};

namespace detail {

class Recorder {
public:
    explicit Recorder(VerifyResult& out) : out_(out) {}

    template <typename Describe>
    void check(const std::string& name, bool pass, Describe&& what) {
        auto& t = out_.checks[name];
        ++t.checked;
        if (!pass) {
            ++t.failed;
            out_.violations.push_back(name + ": " + what());
        }
    }

    void diagnostic_logconcave(bool pass) {
        ++out_.logconcave.checked;
        if (!pass) ++out_.logconcave.failed;
    }

    /// Runs `body`; an escaping exception counts as one failed check.
    void guarded(const std::string& name, const std::string& instance, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(name, false, [&] { return instance + " threw: " + e.what(); });
        }
    }

private:
    VerifyResult& out_;
};

inline void verify_sequence(Recorder& rec, const std::string& id, const CoeffSequence& s, const VerifyConfig& cfg) {
    const auto report = verify_theorem2(s, cfg.q_min, cfg.q_max);
    for (const auto& r : report.records)
        rec.check("two_sided_bound", r.ok, [&] {
            return id + " q=" + std::to_string(r.q) + " k=" + std::to_string(r.k) + " value " + r.value.str();
        });
    rec.check("sharpness", report.all_tight() == (s.m == s.r), [&] { return id + " tightness disagrees with m == r"; });

    for (std::size_t k = 0; k + 1 <= s.r; ++k) {
        BigInt alt = 0;
        for (std::size_t i = 0; i <= k; ++i) alt += (i % 2 == 0) ? s.a[i] : BigInt(-s.a[i]);
        if (k % 2 == 1) alt = -alt;
        const BigInt floor = binom(static_cast<long long>(s.r) - 1, static_cast<long long>(k));
        rec.check("partial_sum_sign", alt >= floor && floor >= 1, [&] { return id + " k=" + std::to_string(k); });
    }
    rec.check("alternating_sums", corollary5_check(s).ok, [&] { return id; });

    const IntPolynomial essential = essential_poly(s);
    for (std::size_t j = 0; j <= s.r; ++j)
        rec.check("delta_closed_form", delta_iter(essential, j) == delta_iter_closed_form(s, j),
                  [&] { return id + " j=" + std::to_string(j); });

    rec.diagnostic_logconcave(is_logconcave(s));
}

inline void verify_nbc(Recorder& rec, const std::string& id, const Arrangement& a, const CoeffSequence& s,
                       corpus::Rng& rng, const VerifyConfig& cfg) {
    if (a.size() > cfg.nbc_max_m) return;
    for (std::size_t o = 0; o < cfg.orders; ++o) {
        const auto order = o == 0 ? GroundOrder::natural(a.size()) : GroundOrder::random(a.size(), rng);
        const auto counts = nbc_counts(a, order, cfg.subset_guard);
        for (std::size_t k = 0; k < counts.size(); ++k)
            rec.check("nbc_theorem", counts[k] == s.at(static_cast<long long>(k)),
                      [&] { return id + " order#" + std::to_string(o) + " k=" + std::to_string(k); });
    }
}

inline void verify_arrangement(Recorder& rec, const std::string& id, const Arrangement& a, corpus::Rng& rng,
                               const VerifyConfig& cfg) {
    const IntPolynomial chi = char_poly(a, cfg.subset_guard);
    rec.check("two_algorithms", chi == char_poly_whitney(a, cfg.subset_guard), [&] { return id; });

    const std::size_t n = a.ambient_dim();
    const std::size_t m = a.size();
    const std::size_t r = rank(a);
    rec.check("char_poly_shape",
              chi.degree() == static_cast<long long>(n) && chi.coeff(n) == 1 &&
                  chi.lowest_power() == static_cast<long long>(n - r),
              [&] { return id + " " + chi.to_string(); });

    CoeffSequence s;
    bool shaped = true;
    try {
        s = coeff_sequence(chi, m);
    } catch (const ValidationError& e) {
        shaped = false;
        rec.check("sign_alternation", false, [&] { return id + " " + e.what(); });
    }
    if (!shaped) return;
    rec.check("sign_alternation", s.r == r, [&] { return id + " rank mismatch"; });

    for (std::size_t h = 0; h < m; ++h) {
        const IntPolynomial rhs =
            char_poly(delete_hyperplane(a, h), cfg.subset_guard) - char_poly(restrict_to(a, h), cfg.subset_guard);
        rec.check("deletion_restriction", chi == rhs, [&] { return id + " H" + std::to_string(h); });
    }

    const bool boolean = is_boolean(a);
    if (boolean)
        rec.check("boolean_formula", chi == boolean_char_poly(n, m), [&] { return id; });

    const bool gp = is_general_position(a, cfg.subset_guard);
    bool gp_coeffs = true;
    for (std::size_t k = 0; k <= r; ++k)
        if (s.at(static_cast<long long>(k)) != binom(static_cast<long long>(m), static_cast<long long>(k)))
            gp_coeffs = false;
    rec.check("general_position_iff", gp == gp_coeffs, [&] { return id; });
    if (is_central(a)) rec.check("central_gp_iff_boolean", gp == boolean, [&] { return id; });

    const Arrangement ess = essentialize(a);
    rec.check("essentialize",
              ess.size() == m && ess.ambient_dim() == r && rank(ess) == r &&
                  coeff_sequence(char_poly(ess, cfg.subset_guard), m) == CoeffSequence{r, m, r, s.a},
              [&] { return id; });

    if (a.is_linear()) {
        const IntPolynomial target = delta(chi);
        for (std::size_t k0 = 0; k0 < m; ++k0)
            rec.check("decone_delta", char_poly(decone(a, k0), cfg.subset_guard) == target,
                      [&] { return id + " k0=" + std::to_string(k0); });
    }

    verify_nbc(rec, id, a, s, rng, cfg);
    verify_sequence(rec, id, s, cfg);
}

inline void verify_graph(Recorder& rec, const std::string& id, const SimpleGraph& g, corpus::Rng& rng,
                         const VerifyConfig& cfg) {
    const IntPolynomial chi = chromatic_poly(g);
    rec.check("coloring_oracle", chi == chromatic_poly_interpolated(g, cfg.coloring_cap),
              [&] { return id + " " + chi.to_string(); });
    for (const auto& e : g.edges())
        rec.check("graph_deletion_contraction",
                  chi == chromatic_poly(delete_edge(g, e)) - chromatic_poly(contract_edge(g, e)),
                  [&] { return id + " edge " + std::to_string(e.first) + "-" + std::to_string(e.second); });
    const bool boolean_shape =
        g.edge_count() <= g.vertex_count() && chi == boolean_char_poly(g.vertex_count(), g.edge_count());
    rec.check("forest_formula", is_forest(g) == boolean_shape,
              [&] { return id; });
    rec.guarded("forest_equivalence", id, [&] {
        const auto eq = forest_equivalence(g);
        rec.check("forest_equivalence", eq.forest == is_forest(g), [&] { return id; });
    });

    const Arrangement a = graphic_arrangement(g);
    rec.check("graphic_char_poly", char_poly(a, cfg.subset_guard) == chi, [&] { return id; });
    verify_arrangement(rec, id, a, rng, cfg);
}

}  // namespace detail

/// Runs the whole sweep. Deterministic for a given config.
inline VerifyResult run_verify(const VerifyConfig& cfg) {
    VerifyResult out;
    detail::Recorder rec(out);
    corpus::Rng rng(cfg.seed);

    std::vector<corpus::NamedGraph> graphs;
    if (cfg.include_named) graphs = corpus::named_graphs();
    for (auto& g : corpus::random_graphs(rng, cfg.graphs, cfg.max_n)) graphs.push_back(std::move(g));
    auto arrangements = corpus::random_arrangements(rng, cfg.arrangements, cfg.max_dim, cfg.max_m);

    out.graph_count = graphs.size();
    out.arrangement_count = arrangements.size();
    for (const auto& [name, g] : graphs)
        rec.guarded("exception", "graph " + name, [&] { detail::verify_graph(rec, "graph " + name, g, rng, cfg); });
    for (const auto& [name, a] : arrangements)
        rec.guarded("exception", "arrangement " + name,
                    [&] { detail::verify_arrangement(rec, "arrangement " + name, a, rng, cfg); });
    return out;
}

inline nlohmann::json to_json(const VerifyConfig& c) {
    return {{"seed", c.seed},
            {"graphs", c.graphs},
            {"max_n", c.max_n},
            {"arrangements", c.arrangements},
            {"max_dim", c.max_dim},
            {"max_m", c.max_m},
            {"q_min", c.q_min},
            {"q_max", c.q_max},
            {"orders", c.orders},
            {"nbc_max_m", c.nbc_max_m},
            {"cap_subsets", c.subset_guard},
            {"cap_colorings", c.coloring_cap},
            {"named", c.include_named}};
}

inline nlohmann::json to_json(const VerifyResult& r) {
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [name, t] : r.checks) checks[name] = {{"checked", t.checked}, {"failed", t.failed}};
    return {{"instances", {{"graphs", r.graph_count}, {"arrangements", r.arrangement_count}}},
            {"checks", checks},
            {"total_checks", r.total_checks()},
            {"diagnostics", {{"logconcave", {{"checked", r.logconcave.checked}, {"failed", r.logconcave.failed}}}}}};
}

}  // namespace chromabound
