#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chromabound/cli.hpp"

namespace {

std::vector<std::size_t> parse_order(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw chromabound::InputError("--order: '" + item + "' is not a nonnegative integer");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace chromabound;
    cli::RunConfig cfg;
    std::string format = "text";
    std::string order;

    CLI::App app{"Exact chromatic and characteristic polynomials with binomial partial-sum bound checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--q-min", cfg.q_min, "Smallest q in the bound window");
    app.add_option("--q-max", cfg.q_max, "Largest q in the bound window");
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--cap-subsets", cfg.cap_subsets, "Largest arrangement size for subset and flat enumeration");
    app.add_option("--cap-colorings", cfg.cap_colorings, "Largest t^n for brute-force coloring counts");

    auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial of a graph");
    chromatic->add_option("input", cfg.inputs, "Edge list or DIMACS file")->required();

    auto* bounds = app.add_subcommand("bounds", "Check binomial partial-sum bounds on a graph or arrangement");
    bounds->add_option("input", cfg.inputs, "Graph or arrangement file")->required();
    bounds->add_option("--k-cap", cfg.k_cap, "Largest k to examine");
    bounds->add_option("--probe-outside", cfg.probe_outside, "Also report this many k beyond q+r+1");

    auto* nbc = app.add_subcommand("nbc", "Compare no-broken-circuit counts with the coefficients");
    nbc->add_option("input", cfg.inputs, "Graph or arrangement file")->required();
    nbc->add_option("--order", order, "Ground order, smallest first, e.g. 2,0,1");

    auto* dec = app.add_subcommand("decone", "Decone a linear arrangement and check chi(dA) = Delta chi(A)");
    dec->add_option("input", cfg.inputs, "Arrangement or graph file")->required();
    dec->add_option("--k0", cfg.k0, "Index of the hyperplane to decone at");

    auto* verify = app.add_subcommand("verify", "Seeded sweep over every cross-check");
    verify->add_option("--graphs", cfg.verify.graphs, "Random graphs");
    verify->add_option("--max-n", cfg.verify.max_n, "Largest random graph order");
    verify->add_option("--arrangements", cfg.verify.arrangements, "Random arrangements");
    verify->add_option("--max-dim", cfg.verify.max_dim, "Largest random arrangement dimension");
    verify->add_option("--max-m", cfg.verify.max_m, "Largest random arrangement size");
    verify->add_option("--orders", cfg.verify.orders, "Ground orders per NBC check");
    verify->add_flag("!--no-named", cfg.verify.include_named, "Skip the named graph families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? cli::kOk : cli::kInputError;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? cli::Format::Json : cli::Format::Text;
    // verify sweeps a wider q window unless one was given explicitly
    if (cfg.command == "verify") {
        if (app.count("--q-min") == 0) cfg.q_min = cfg.verify.q_min;
        if (app.count("--q-max") == 0) cfg.q_max = cfg.verify.q_max;
    }

    cli::CommandOutput out;
    try {
        if (!order.empty()) cfg.order = parse_order(order);
        out = cli::dispatch(cfg);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kInputError;
    }
    for (const auto& w : out.warnings) std::cerr << "warning: " << w << "\n";
    if (out.report.is_null()) {
        std::cerr << out.text;
    } else {
        std::cout << out.render(cfg.format);
    }
    return out.exit_code;
}
