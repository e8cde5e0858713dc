#include <gtest/gtest.h>

#include <sstream>

#include "chromabound/cli.hpp"
#include "chromabound/io.hpp"

using namespace chromabound;

namespace {

std::string data(const std::string& name) { return std::string(CHROMABOUND_DATA_DIR) + "/" + name; }

cli::RunConfig config(const std::string& command, const std::string& input = "") {
    cli::RunConfig c;
    c.command = command;
    if (!input.empty()) c.inputs = {data(input)};
    return c;
}

}  // namespace

TEST(Parse, EdgeList) {
    std::istringstream in("# c\nn 3\n0 1\n\n1 2\n1 0\n");
    const auto g = io::parse_edge_list(in);
    EXPECT_EQ(g.graph.vertex_count(), 3u);
    EXPECT_EQ(g.graph.edge_count(), 2u);
    ASSERT_EQ(g.warnings.size(), 1u);
    EXPECT_NE(g.warnings[0].find("line 6"), std::string::npos);
}

TEST(Parse, EdgeListErrorsCarryLineNumbers) {
    std::istringstream loop("n 3\n0 1\n2 2\n");
    try {
        io::parse_edge_list(loop);
        FAIL() << "loop accepted";
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("loop"), std::string::npos);
    }
    std::istringstream range("n 2\n0 5\n");
    EXPECT_THROW(io::parse_edge_list(range), InputError);
    std::istringstream junk("n 2\n0 x\n");
    EXPECT_THROW(io::parse_edge_list(junk), InputError);
    std::istringstream no_header("0 1\n");
    EXPECT_THROW(io::parse_edge_list(no_header), InputError);
}

TEST(Parse, DimacsIsOneBased) {
    const auto parsed = io::load_input(data("c4.col"));
    const auto& g = std::get<io::ParsedGraph>(parsed).graph;
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_TRUE(g.edges().contains({0, 3}));
    EXPECT_EQ(chromatic_poly(g), IntPolynomial({0, -3, 6, -4, 1}));
    std::istringstream zero("p edge 2 1\ne 0 1\n");
    EXPECT_THROW(io::parse_dimacs(zero), InputError);
}

TEST(Parse, Arrangement) {
    const auto parsed = io::load_input(data("rational.arr"));
    const auto& a = std::get<io::ParsedArrangement>(parsed).arrangement;
    EXPECT_EQ(a.ambient_dim(), 3u);
    EXPECT_EQ(a.size(), 4u);
    // 1/2 x - y = 3/4  ->  x - 2y = 3/2
    EXPECT_EQ(a[0].normal(), (std::vector<BigInt>{1, -2, 0}));
    EXPECT_EQ(a[0].offset(), Rational(3, 2));
    std::istringstream short_row("dim 2\n1 0\n");
    EXPECT_THROW(io::parse_arrangement(short_row), InputError);
    std::istringstream zero_den("dim 1\n1 1/0\n");
    EXPECT_THROW(io::parse_arrangement(zero_den), InputError);
    std::istringstream zero_normal("dim 2\n0 0 1\n");
    EXPECT_THROW(io::parse_arrangement(zero_normal), InputError);
}

TEST(Parse, ArrangementTextRoundTrip) {
    const auto a = std::get<io::ParsedArrangement>(io::load_input(data("rational.arr"))).arrangement;
    std::istringstream again(io::format_arrangement(a));
    EXPECT_EQ(io::parse_arrangement(again).arrangement, a);
}

TEST(Json, BoundsReportRoundTrips) {
    const auto s = coeff_sequence(chromatic_poly(named::complete(5)), 10);
    const auto rep = verify_theorem2(s, -5, 5, {std::nullopt, 2});
    const auto text = io::to_json(rep).dump();
    EXPECT_EQ(io::bounds_report_from_json(nlohmann::json::parse(text)), rep);
    EXPECT_EQ(io::coeff_sequence_from_json(nlohmann::json::parse(io::to_json(s).dump())), s);
}

TEST(Json, BigCoefficientsAreStrings) {
    const auto j = io::to_json(IntPolynomial({0, 0, 1}).pow(40) * IntPolynomial({-1, 1}).pow(40));
    EXPECT_TRUE(j.front().is_string());
}

TEST(Cli, ChromaticK3) {
    auto c = config("chromatic", "k3.txt");
    const auto out = cli::dispatch(c);
    EXPECT_EQ(out.exit_code, cli::kOk);
    EXPECT_EQ(out.report["results"]["polynomial"], "t^3 - 3t^2 + 2t");
    EXPECT_EQ(out.report["results"]["r"], 2);
    EXPECT_NE(out.text.find("t^3 - 3t^2 + 2t"), std::string::npos);
    EXPECT_EQ(out.report["results"]["coefficients"], nlohmann::json({"0", "2", "-3", "1"}));
}

TEST(Cli, ChromaticEmptyGraph) {
    const auto out = cli::dispatch(config("chromatic", "empty3.txt"));
    EXPECT_EQ(out.report["results"]["polynomial"], "t^3");
}

TEST(Cli, ChromaticRejectsLoop) {
    const auto out = cli::dispatch(config("chromatic", "loop.txt"));
    EXPECT_EQ(out.exit_code, cli::kInputError);
    EXPECT_NE(out.text.find("loop"), std::string::npos);
}

TEST(Cli, ChromaticRejectsArrangement) {
    EXPECT_EQ(cli::dispatch(config("chromatic", "boolean_pair.arr")).exit_code, cli::kInputError);
}

TEST(Cli, BoundsK4) {
    const auto out = cli::dispatch(config("bounds", "k4.txt"));
    EXPECT_EQ(out.exit_code, cli::kOk);
    EXPECT_TRUE(out.report["violations"].empty());
    EXPECT_EQ(out.report["config"]["q_window"], nlohmann::json({-3, 3}));
    const auto rep = io::bounds_report_from_json(out.report["results"]["bounds"]);
    EXPECT_TRUE(rep.all_ok());
    EXPECT_FALSE(rep.all_tight());
}

TEST(Cli, BoundsForestIsTight) {
    const auto out = cli::dispatch(config("bounds", "path4.txt"));
    EXPECT_EQ(out.exit_code, cli::kOk);
    EXPECT_TRUE(out.report["results"]["all_tight"].get<bool>());
}

TEST(Cli, BoundsGenericLines) {
    const auto out = cli::dispatch(config("bounds", "generic_lines.arr"));
    EXPECT_EQ(out.exit_code, cli::kOk);
    EXPECT_EQ(out.report["results"]["sequence"]["a"], nlohmann::json({"1", "3", "3"}));
}

TEST(Cli, BoundsRejectsBadWindow) {
    auto c = config("bounds", "k4.txt");
    c.q_min = 2;
    c.q_max = 1;
    EXPECT_EQ(cli::dispatch(c).exit_code, cli::kInputError);
}

TEST(Cli, ResourceCapExitCode) {
    auto c = config("bounds", "rational.arr");
    c.cap_subsets = 2;
    EXPECT_EQ(cli::dispatch(c).exit_code, cli::kResourceCap);
}

TEST(Cli, MissingFileIsInputError) {
    EXPECT_EQ(cli::dispatch(config("bounds", "does-not-exist.txt")).exit_code, cli::kInputError);
}

TEST(Cli, NbcK3) {
    const auto out = cli::dispatch(config("nbc", "k3.txt"));
    EXPECT_EQ(out.exit_code, cli::kOk);
    const auto& rows = out.report["results"]["rows"];
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[2]["nbc"], "2");
    EXPECT_EQ(rows[2]["a_k"], "2");
}

TEST(Cli, NbcForestAndEmpty) {
    auto out = cli::dispatch(config("nbc", "path4.txt"));
    const auto& rows = out.report["results"]["rows"];
    ASSERT_EQ(rows.size(), 4u);
    for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(rows[k]["nbc"], binom(3, static_cast<long long>(k)).str());
    out = cli::dispatch(config("nbc", "empty3.txt"));
    EXPECT_EQ(out.report["results"]["rows"].size(), 1u);
}

TEST(Cli, NbcCustomOrder) {
    auto c = config("nbc", "k4.txt");
    c.order = std::vector<std::size_t>{5, 3, 1, 0, 2, 4};
    EXPECT_EQ(cli::dispatch(c).exit_code, cli::kOk);
    c.order = std::vector<std::size_t>{0, 1};
    EXPECT_EQ(cli::dispatch(c).exit_code, cli::kInputError);
}

TEST(Cli, DeconeGraphicK3) {
    auto c = config("decone", "graphic_k3.arr");
    const auto out = cli::dispatch(c);
    EXPECT_EQ(out.exit_code, cli::kOk);
    EXPECT_EQ(out.report["results"]["chi_deconed"], "t^2 - 2t");
    EXPECT_EQ(out.report["results"]["delta_chi"], "t^2 - 2t");
    EXPECT_TRUE(out.report["results"]["holds"].get<bool>());
}

TEST(Cli, DeconeSmallCases) {
    auto out = cli::dispatch(config("decone", "single_plane.arr"));
    EXPECT_EQ(out.exit_code, cli::kOk);
    EXPECT_EQ(out.report["results"]["chi_deconed"], "t^2");
    auto c = config("decone", "boolean_pair.arr");
    c.k0 = 1;
    out = cli::dispatch(c);
    EXPECT_EQ(out.report["results"]["chi_deconed"], "t - 1");
}

TEST(Cli, DeconeRejectsAffine) {
    const auto out = cli::dispatch(config("decone", "generic_lines.arr"));
    EXPECT_EQ(out.exit_code, cli::kInputError);
    EXPECT_NE(out.text.find("not linear"), std::string::npos);
}

TEST(Cli, VerifyVacuousAndSmall) {
    auto c = config("verify");
    c.verify.graphs = 0;
    c.verify.arrangements = 0;
    c.verify.include_named = false;
    auto out = cli::dispatch(c);
    EXPECT_EQ(out.exit_code, cli::kOk);
    EXPECT_EQ(out.report["results"]["total_checks"], 0);

    c.verify.graphs = 15;
    c.verify.arrangements = 12;
    c.q_min = -5;
    c.q_max = 5;
    out = cli::dispatch(c);
    EXPECT_EQ(out.exit_code, cli::kOk) << out.text;
    EXPECT_TRUE(out.report["violations"].empty());
    EXPECT_EQ(out.report, cli::dispatch(c).report);
}

TEST(Cli, VerifyMatchesGoldenReport) {
    auto c = config("verify");
    c.seed = 7;
    c.verify.graphs = 12;
    c.verify.arrangements = 8;
    c.verify.include_named = false;
    c.q_min = -5;
    c.q_max = 5;
    const auto out = cli::dispatch(c);
    const auto golden = io::read_file(std::string(CHROMABOUND_GOLDEN_DIR) + "/verify_seed7.json");
    EXPECT_EQ(out.render(cli::Format::Json), golden);
}
