#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gvm/diagram.hpp"
#include "gvm/harness.hpp"

namespace gvm {
namespace {

ParabolicSetup A(int n, int p, int q) { return ParabolicSetup(LieType(LieKind::A, n), p, q); }
ParabolicSetup D(int n, int p, int q) { return ParabolicSetup(LieType(LieKind::D, n), p, q); }

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) out.push_back(line);
    return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

TEST(Harness, RationalRange) {
    const auto r = rational_range(Rational(-1), Rational(1), Rational(1, 2));
    ASSERT_EQ(r.size(), 5u);
    EXPECT_EQ(r.front(), ExactScalar(-1));
    EXPECT_EQ(r.back(), ExactScalar(1));
}

TEST(Harness, StandardGridContents) {
    const auto s = A(8, 2, 5);
    const auto g = standard_grid(s);
    const std::size_t lattice = 2 * (3 + 10) + 1;
    EXPECT_EQ(g.z1_values.size(), lattice + 3);
    EXPECT_EQ(g.size(), (lattice + 3) * (lattice + 3) + lattice * lattice);
    const auto pts = g.points();
    EXPECT_EQ(pts.size(), g.size());
    auto has = [&](const ExactScalar& a, const ExactScalar& b) {
        return std::any_of(pts.begin(), pts.end(), [&](const GridPoint& p) { return p.z1 == a && p.z2 == b; });
    };
    for (const Rational z : {Rational(-5, 2), Rational(-2), Rational(-3, 2)}) EXPECT_TRUE(has(z, z));
    EXPECT_TRUE(has(tau(), sigma()));
    EXPECT_TRUE(has(ExactScalar(-1) + tau(), ExactScalar(2) - tau()));
    const auto d = standard_grid(D(6, 1, 5)).points();
    for (int z2 = -8; z2 <= 3; ++z2)
        EXPECT_TRUE(std::any_of(d.begin(), d.end(), [&](const GridPoint& p) {
            return p.z1 == ExactScalar(-1) && p.z2 == ExactScalar(z2);
        }));
}

TEST(Harness, DiagonalGridPairsEqualValues) {
    const auto g = diagonal_grid(A(8, 2, 5));
    for (const auto& [z1, z2] : g.points()) EXPECT_EQ(z1, z2);
    ParameterGrid bad{{ExactScalar(1)}, {}, Pairing::Diagonal, {}};
    EXPECT_THROW(bad.points(), UnsupportedGrid);
}

TEST(Harness, SweepSlFiveEightDiagonal) {
    const auto axis = rational_range(Rational(-4), Rational(1), Rational(1, 2));
    const auto report = sweep(A(8, 2, 5), {axis, axis, Pairing::Diagonal, {}});
    ASSERT_EQ(report.rows.size(), 11u);
    EXPECT_EQ(report.summary.reducible, 7u);
    EXPECT_EQ(report.summary.irreducible, 4u);
    EXPECT_EQ(report.summary.mismatch, 0u);
    for (const auto& v : report.rows) EXPECT_EQ(v.reducible_oracle, v.z1.rational_part() >= Rational(-2));
}

TEST(Harness, SweepSoTwelveColumn) {
    std::vector<ExactScalar> z2;
    for (int v = -5; v <= 0; ++v) z2.emplace_back(v);
    const auto report = sweep(D(6, 1, 5), {{ExactScalar(0)}, z2, Pairing::Cartesian, {}});
    ASSERT_EQ(report.rows.size(), 6u);
    EXPECT_EQ(report.summary.reducible, 6u);
}

TEST(Harness, SweepCountsAndOrder) {
    const auto s = A(6, 2, 4);
    const auto grid = standard_grid(s);
    const auto report = sweep(s, grid, {3, {}});
    ASSERT_EQ(report.rows.size(), grid.size());
    EXPECT_TRUE(report.errors.empty());
    EXPECT_EQ(report.summary.reducible + report.summary.irreducible, report.rows.size());
    std::size_t red = 0;
    for (const auto& v : report.rows) red += v.reducible_oracle;
    EXPECT_EQ(red, report.summary.reducible);
    const auto pts = grid.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_EQ(report.rows[i].z1, pts[i].z1);
        EXPECT_EQ(report.rows[i].z2, pts[i].z2);
    }
    EXPECT_EQ(report.summary.mismatch, 0u);
}

TEST(Harness, SweepIsDeterministicAcrossThreadCounts) {
    const auto s = D(6, 5, 6);
    const auto grid = standard_grid(s);
    const auto one = sweep(s, grid, {1, {}});
    const auto four = sweep(s, grid, {4, {}});
    EXPECT_EQ(to_csv(one), to_csv(four));
    EXPECT_EQ(to_json(one).dump(), to_json(four).dump());
    EXPECT_EQ(render_svg(one), render_svg(four));
}

TEST(Harness, SweepCollectsPointErrors) {
    const auto s = A(5, 1, 3);
    const Criterion throwing = [](const ParabolicSetup&, const ExactScalar& z1, const ExactScalar&) {
        if (z1 == ExactScalar(0)) throw NonIntegralWeight("fixture failure");
        return false;
    };
    const auto axis = rational_range(Rational(-1), Rational(1), Rational(1));
    const auto report = sweep(s, {axis, axis, Pairing::Cartesian, {}}, {1, throwing});
    EXPECT_EQ(report.errors.size(), 3u);
    EXPECT_EQ(report.rows.size(), 6u);
    EXPECT_EQ(report.errors.front().index, 3u);
}

TEST(Harness, VerifyFamilies) {
    const auto a = verify_family(LieKind::A, 6);
    EXPECT_TRUE(a.verified());
    EXPECT_EQ(a.setups_checked, 1u + 3u + 6u + 10u);
    const auto d = verify_family(LieKind::D, 6);
    EXPECT_TRUE(d.verified());
    EXPECT_EQ(d.setups_checked, 9u);
}

TEST(Harness, VerifyDetectsCorruptedCriterion) {
    // Flip the diagonal branch for non-integral z.
    const Criterion corrupted = [](const ParabolicSetup& s, const ExactScalar& z1, const ExactScalar& z2) {
        const bool honest = reducible_criterion(s, z1, z2);
        return (z1 == z2 && !z1.is_integer()) ? !honest : honest;
    };
    const auto report = verify_family(LieKind::A, 6, {0, corrupted});
    EXPECT_FALSE(report.verified());
    EXPECT_FALSE(report.mismatches.empty());
}

TEST(Formats, Csv) {
    const auto axis = rational_range(Rational(-1), Rational(0), Rational(1, 2));
    ParameterGrid g{axis, axis, Pairing::Cartesian, {{ExactScalar(Rational(1, 2)) + tau(), ExactScalar(1) - tau()}}};
    const auto report = sweep(A(8, 2, 5), g);
    const auto ls = lines(to_csv(report));
    ASSERT_EQ(ls.size(), 1 + g.size());
    EXPECT_EQ(ls[0], "type,n,p,q,z1,z2,gk,dim_u,reducible,criterion,agree");
    const std::regex row(R"(^A,8,2,5,[-0-9/+*a-z]+,[-0-9/+*a-z]+,\d+,21,(true|false),(true|false),(true|false)$)");
    for (std::size_t i = 1; i < ls.size(); ++i) EXPECT_TRUE(std::regex_match(ls[i], row)) << ls[i];
    EXPECT_EQ(ls.back().substr(0, 22), "A,8,2,5,1/2+tau,1-tau,");
    for (std::size_t i = 1; i < ls.size(); ++i) {
        std::stringstream ss(ls[i]);
        std::vector<std::string> f;
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        ASSERT_EQ(f.size(), 11u);
        const auto& v = report.rows[i - 1];
        EXPECT_EQ(parse_scalar(f[4]), v.z1);
        EXPECT_EQ(parse_scalar(f[5]), v.z2);
        EXPECT_EQ(f[8] == "true", std::stoll(f[6]) < std::stoll(f[7]));
    }
}

TEST(Formats, Json) {
    const auto axis = rational_range(Rational(-3), Rational(0), Rational(1));
    const auto report = sweep(D(7, 6, 7), {axis, axis, Pairing::Cartesian, {}});
    const auto j = nlohmann::json::parse(to_json(report).dump(2));
    ASSERT_TRUE(j.contains("verdicts"));
    ASSERT_TRUE(j["verdicts"].is_array());
    ASSERT_EQ(j["verdicts"].size(), 16u);
    const std::vector<std::string> keys{"type", "n", "p", "q", "z1", "z2", "gk", "dim_u", "reducible", "criterion", "agree"};
    const auto ordered = to_json(report);
    for (const auto& v : ordered["verdicts"]) {
        std::vector<std::string> got;
        for (const auto& [k, _] : v.items()) got.push_back(k);
        EXPECT_EQ(got, keys);
        EXPECT_EQ(v["reducible"].get<bool>(), v["gk"].get<int>() < v["dim_u"].get<int>());
        EXPECT_TRUE(v["z1"].is_string());
    }
    EXPECT_EQ(j["summary"]["points"], 16);
    EXPECT_EQ(j["summary"]["reducible"].get<int>() + j["summary"]["irreducible"].get<int>(), 16);
    EXPECT_EQ(j["summary"]["mismatch"], 0);
    EXPECT_EQ(j["summary"]["errors"], 0);
}

TEST(Formats, JsonAbsentCriterionIsNull) {
    const auto v = reducible_oracle(A(8, 2, 5), 0, 0);
    const auto j = to_json(v);
    EXPECT_TRUE(j["criterion"].is_null());
    EXPECT_TRUE(j["agree"].is_null());
    EXPECT_EQ(csv_row(v).substr(csv_row(v).size() - 2), ",,");
}

TEST(Diagram, SvgMarksEveryReducibleLatticePoint) {
    const auto s = A(10, 3, 6);
    const auto report = sweep(s, standard_grid(s));
    const std::string svg = render_svg(report);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);

    std::size_t lattice_reducible = 0;
    for (const auto& v : report.rows)
        if (v.z1.is_rational() && v.z2.is_rational() && v.reducible_oracle &&
            is_integral(v.z1.rational_part() * Rational(2)) && is_integral(v.z2.rational_part() * Rational(2)))
            ++lattice_reducible;
    EXPECT_EQ(count(svg, "<circle"), lattice_reducible);
    EXPECT_NE(svg.find("class=\"legend\""), std::string::npos);
    EXPECT_NE(svg.find("generic-offset points:"), std::string::npos);

    // z2 in -2 + Z>=0 and z1 in -2 + Z>=0 are full lines.
    for (int v = -2; v <= 3; ++v) {
        EXPECT_NE(svg.find("class=\"branch horizontal\" data-z2=\"" + std::to_string(v) + "\""), std::string::npos) << v;
        EXPECT_NE(svg.find("class=\"branch vertical\" data-z1=\"" + std::to_string(v) + "\""), std::string::npos) << v;
    }
    EXPECT_EQ(svg.find("class=\"branch horizontal\" data-z2=\"-3\""), std::string::npos);
    EXPECT_NE(svg.find("class=\"branch antidiagonal\" data-sum=\"-5\""), std::string::npos);
    EXPECT_EQ(svg.find("class=\"branch antidiagonal\" data-sum=\"-6\""), std::string::npos);
}

TEST(Diagram, SvgScaleIsFortyUnitsPerLatticeUnit) {
    const auto axis = rational_range(Rational(-1), Rational(1), Rational(1, 2));
    const auto report = sweep(A(5, 1, 3), {axis, axis, Pairing::Cartesian, {}});
    const std::string svg = render_svg(report);
    const std::regex circle(R"re(<circle[^>]*data-z1="([^"]+)" data-z2="([^"]+)" cx="([^"]+)" cy="([^"]+)")re");
    std::size_t seen = 0;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), circle); it != std::sregex_iterator(); ++it) {
        const Rational z1 = parse_scalar((*it)[1].str()).rational_part();
        const Rational z2 = parse_scalar((*it)[2].str()).rational_part();
        const double cx = std::stod((*it)[3].str());
        const double cy = std::stod((*it)[4].str());
        EXPECT_DOUBLE_EQ(cx, kMargin + 40.0 * boost::rational_cast<double>(z1 - Rational(-1)));
        EXPECT_DOUBLE_EQ(cy, kMargin + 40.0 * boost::rational_cast<double>(Rational(1) - z2));
        ++seen;
    }
    EXPECT_EQ(seen, report.summary.reducible);
}

TEST(Diagram, SoFourteenBranches) {
    const auto s = D(7, 6, 7);
    const std::string svg = render_svg(sweep(s, standard_grid(s)));
    for (int v = 0; v <= 3; ++v) {
        EXPECT_NE(svg.find("data-z1=\"" + std::to_string(v) + "\" x1"), std::string::npos);
        EXPECT_NE(svg.find("data-z2=\"" + std::to_string(v) + "\" x1"), std::string::npos);
    }
    EXPECT_NE(svg.find("class=\"reducible diagonal\" data-z1=\"-3\" data-z2=\"-3\""), std::string::npos);
    EXPECT_NE(svg.find("class=\"reducible diagonal\" data-z1=\"-5/2\" data-z2=\"-5/2\""), std::string::npos);
    EXPECT_EQ(svg.find("data-z1=\"-7/2\" data-z2=\"-7/2\""), std::string::npos);
}

TEST(Diagram, EmptyReportHasAxesOnly) {
    const auto report = sweep(A(5, 1, 3), ParameterGrid{});
    const std::string svg = render_svg(report);
    EXPECT_EQ(count(svg, "<circle"), 0u);
    EXPECT_EQ(count(svg, "<line class=\"branch "), 0u);
    EXPECT_EQ(count(svg, "class=\"axis\""), 2u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Diagram, Ascii) {
    const auto axis = rational_range(Rational(-3), Rational(0), Rational(1));
    const auto report = sweep(A(8, 2, 5), {axis, axis, Pairing::Cartesian, {}});
    const auto ls = lines(render_ascii(report));
    ASSERT_GE(ls.size(), 5u);
    EXPECT_EQ(ls[1].substr(0, 8), "     0 |");
    EXPECT_EQ(ls[4].substr(0, 8), "    -3 |");
    for (std::size_t r = 1; r <= 4; ++r) EXPECT_EQ(count(ls[r], "R") + count(ls[r], "."), 4u);
}

TEST(Diagram, RejectsRaggedGrid) {
    const auto s = A(5, 1, 3);
    const std::vector<ExactScalar> xs{ExactScalar(0), ExactScalar(1), ExactScalar(2)};
    ParameterGrid g{xs, xs, Pairing::Diagonal, {}};
    EXPECT_THROW(render_svg(sweep(s, g)), UnsupportedGrid);
}

}  // namespace
}  // namespace gvm
