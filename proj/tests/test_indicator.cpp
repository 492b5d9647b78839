#include <doctest.h>

#include <set>
#include <vector>

#include "ktree/errors.hpp"
#include "ktree/indicator.hpp"
#include "ktree/tree.hpp"
#include "oracle.hpp"

using namespace ktree;
using ktree::testing::dec_of;
using ktree::testing::Dec;

namespace {

KValue phi() { return KValue::parse("golden:1,1"); }

// All recurrence-range pairs with k > 1 for a given a bound.
std::vector<GoldenParams> golden_grid(long long a_max) {
    std::vector<GoldenParams> grid;
    for (long long a = 1; a <= a_max; ++a)
        for (long long b = 2 - a; b <= a; ++b) grid.push_back({a, b});
    return grid;
}

}  // namespace

TEST_CASE("count_indicator examples") {
    CHECK(count_indicator(1, phi()) == QuadReal(-1, 1, 5, 2));  // φ − 1
    CHECK(count_indicator(2, KValue::parse("3/2")).is_zero());
    CHECK(count_indicator(4, phi()) == QuadReal(-4, 2, 5, 1));  // {4φ} = 2√5 − 4
    CHECK(abs(dec_of(count_indicator(4, phi())) - Dec("0.47213595499957939282")) < Dec("1e-18"));
    CHECK_THROWS_AS(count_indicator(0, phi()), InvalidParams);
    CHECK_THROWS_AS(count_indicator(3, KValue::parse("1.61803")), UnsupportedRepresentation);
}

TEST_CASE("classify boundary behavior") {
    const QuadReal zero;
    CHECK(classify(zero, phi()) == RangeClass::Ceil);
    // x = 1 − {k} is inclusive floor-range: for k = 3/2 that is 1/2
    const KValue th = KValue::parse("3/2");
    CHECK(classify(QuadReal{BigRat(1, 2)}, th) == RangeClass::Floor);
    CHECK(classify(QuadReal{BigRat(1, 2)} + QuadReal{BigRat(1, 100)}, th) == RangeClass::Ceil);
    // {φ} > 1 − {φ}, so {φ} classifies as ceil
    CHECK(classify(phi().frac_k(), phi()) == RangeClass::Ceil);
    // exact quadratic boundary: x = 1 − {φ} = 2 − φ = (3 − √5)/2
    CHECK(classify(QuadReal(3, -1, 5, 2), phi()) == RangeClass::Floor);
    CHECK_THROWS_AS(classify(QuadReal(BigInt(1)), phi()), InvalidParams);
    CHECK_THROWS_AS(classify(-QuadReal{BigRat(1, 2)}, phi()), InvalidParams);
}

TEST_CASE("child_indicator: first child of an indicator-0 node for phi") {
    // {1·(1/φ)} = 1/φ = φ − 1
    CHECK(child_indicator(1, QuadReal(), {1, 1}) == QuadReal(-1, 1, 5, 2));
}

TEST_CASE("child_indicator with b = 0 is identically zero") {
    for (int i = 1; i <= 3; ++i) {
        CHECK(child_indicator(i, QuadReal(), {3, 0}).is_zero());
        CHECK(child_indicator(i, QuadReal{BigRat(1, 3)}, {3, 0}).is_zero());
    }
}

TEST_CASE("child_indicator domain errors") {
    CHECK_THROWS_AS(child_indicator(0, QuadReal(), {1, 1}), InvalidParams);
    CHECK_THROWS_AS(child_indicator(3, QuadReal(), {1, 1}), InvalidParams);  // ⌈φ⌉ = 2
    // the ⌈k⌉-th child requires a ceil-range indicator: x = 0.1 < 1 − {φ}
    CHECK_THROWS_AS(child_indicator(2, QuadReal{BigRat(1, 10)}, {1, 1}), ChildAbsent);
    CHECK_NOTHROW(child_indicator(2, QuadReal{BigRat(9, 10)}, {1, 1}));
    CHECK_NOTHROW(child_indicator(2, QuadReal(), {1, 1}));  // x = 0 is ceil-range
    CHECK_THROWS_AS(child_indicator(1, QuadReal(), {2, -5}), InvalidParams);  // not real
}

TEST_CASE("master oracle: the formula equals the direct child indicator") {
    for (const GoldenParams& params : golden_grid(5)) {
        const KValue k = params.k();
        for (BigInt n = 1; n <= 200; ++n) {
            const QuadReal x = count_indicator(n, k);
            const ChildRange range = children(n, k);
            int i = 1;
            for (BigInt c = range.lo; c <= range.hi; ++c, ++i)
                REQUIRE(child_indicator(i, x, params) == count_indicator(c, k));
        }
    }
}

TEST_CASE("consecutive child indicators differ by {b/k}, constantly in i") {
    for (const GoldenParams& params :
         {GoldenParams{1, 1}, GoldenParams{3, -1}, GoldenParams{5, 3}, GoldenParams{4, -2}}) {
        const QuadReal bk = params.k_quad() - QuadReal(BigInt(params.a));  // b/k
        const QuadReal expected = bk.frac();
        const QuadReal x{BigRat(1, 7)};
        const BigInt h = params.k_quad().floor();  // children present at a floor-range x
        for (int i = 1; i < h; ++i) {
            const QuadReal diff =
                (child_indicator(i + 1, x, params) - child_indicator(i, x, params)).frac();
            CHECK(diff == expected);
        }
    }
}

TEST_CASE("cci_lines shapes") {
    const auto phi_lines = cci_lines({1, 1});
    REQUIRE(phi_lines.size() == 2);  // ⌈φ⌉ = 2
    CHECK(!phi_lines[0].restricted);
    CHECK(phi_lines[1].restricted);

    const auto integer_lines = cci_lines({3, 0});
    REQUIRE(integer_lines.size() == 3);
    for (const auto& line : integer_lines) {
        CHECK(!line.restricted);
        CHECK(line.eval(QuadReal{BigRat(2, 5)}).is_zero());
    }

    const auto big_lines = cci_lines({5, 3});  // k = (5+√37)/2 ≈ 5.54
    CHECK(big_lines.size() == 6);
    CHECK(big_lines.back().restricted);

    // the restricted line evaluates exactly where it exists
    CHECK_THROWS_AS(phi_lines[1].eval(QuadReal{BigRat(1, 10)}), ChildAbsent);
    CHECK_NOTHROW(phi_lines[1].eval(QuadReal{BigRat(9, 10)}));
}

TEST_CASE("cci_lines accepts parameters outside the theorem ranges") {
    // a = 3, b = 7 is outside 1−a < b < 1+a but the indicator graph exists
    const auto lines = cci_lines({3, 7});  // k = (3+√37)/2 ≈ 4.54
    CHECK(lines.size() == 5);
}

TEST_CASE("indicator_scatter lands on the first cci line for golden k") {
    const auto points = indicator_scatter(phi(), 500);
    REQUIRE(points.size() == 500);
    for (const auto& [x, fx] : points) CHECK(fx == child_indicator(1, x, {1, 1}));
}

TEST_CASE("indicator_scatter for rational k has finitely many values") {
    const auto points = indicator_scatter(KValue::parse("3/2"), 100);
    std::set<std::string> xs;
    for (const auto& [x, fx] : points) xs.insert(x.str());
    CHECK(xs.size() == 2);  // period 2

    const auto integer_points = indicator_scatter(KValue::parse("3"), 50);
    for (const auto& [x, fx] : integer_points) {
        CHECK(x.is_zero());
        CHECK(fx.is_zero());
    }
}

TEST_CASE("grandparent counts: examples from the theorem") {
    const auto grid = midpoint_grid(1000);

    const GrandparentReport r53 = grandparent_count({5, 3}, grid);
    CHECK(r53.expected == 3);
    CHECK(r53.verdict);
    for (const auto& [x, count] : r53.counts) CHECK(count == 3);

    const GrandparentReport r31 = grandparent_count({3, -1}, grid);
    CHECK(r31.expected == 1);
    CHECK(r31.verdict);

    for (long long a = 2; a <= 6; ++a) {
        const GrandparentReport rb0 = grandparent_count({a, 0}, grid);
        CHECK(rb0.expected == 0);
        CHECK(rb0.verdict);
    }

    CHECK_THROWS_AS(grandparent_count({3, 3}, grid), InvalidParams);   // b > a−1
    CHECK_THROWS_AS(grandparent_count({3, -3}, grid), InvalidParams);  // b < 1−a
}

TEST_CASE("grandparent counts stay constant just inside the range boundary") {
    // sample within 1e-9 on both sides of the ⌈k⌉-th child's appearance point
    // x = 1 − {k}, plus x = 1 − {k} itself (floor-range side, inclusive)
    for (const GoldenParams& params : {GoldenParams{5, 3}, GoldenParams{3, -1}}) {
        const QuadReal k = params.k_quad();
        const QuadReal boundary = QuadReal(BigInt(1)) - k.frac();
        const QuadReal eps{BigRat(1, 1000000000)};
        const std::vector<QuadReal> samples{boundary - eps, boundary, boundary + eps};
        const GrandparentReport report = grandparent_count(params, samples);
        CHECK(report.verdict);
    }
}

TEST_CASE("grandparent count at x = 0: the degenerate integer-k exception") {
    // For b = 1 − a the golden k degenerates to the integer a − 1; every
    // child indicator is 0 there, so the |b| floor-range lines exist for all
    // x in (0,1) but vanish exactly at x = 0. Recorded here as the known
    // boundary exception to the constant-count claim.
    const GoldenParams degenerate{3, -2};  // k = 2
    const GrandparentReport interior = grandparent_count(degenerate, midpoint_grid(100));
    CHECK(interior.verdict);
    CHECK(interior.expected == 2);

    const GrandparentReport at_zero = grandparent_count(degenerate, {QuadReal()});
    CHECK(!at_zero.verdict);
    CHECK(at_zero.counts.at(0).second == 0);

    // irrational golden k has no such exception at x = 0
    for (const GoldenParams& params : {GoldenParams{5, 3}, GoldenParams{3, -1}}) {
        const GrandparentReport report = grandparent_count(params, {QuadReal()});
        CHECK(report.verdict);
    }
}

TEST_CASE("indicator classification predicts child counts across the grid") {
    for (const char* spec : {"3/2", "5/3", "golden:1,1", "quad:(0,1,2,1)", "3"}) {
        const KValue k = KValue::parse(spec);
        for (BigInt n = 1; n <= 2000; ++n)
            CHECK(predicted_child_count(n, k) == children(n, k).count());
    }
}

TEST_CASE("child_indicator rejects samples from a foreign quadratic field") {
    // x = √2 − 1 lives in Q(√2); the (1,1) indicator algebra lives in Q(√5)
    const QuadReal x = QuadReal::sqrt_of(2) - QuadReal(BigInt(1));
    CHECK_THROWS_AS(child_indicator(1, x, {1, 1}), InvalidParams);
    // same-field irrational samples are fine
    const QuadReal y = QuadReal::sqrt_of(5) - QuadReal(BigInt(2));  // ≈ 0.236
    CHECK_NOTHROW(child_indicator(1, y, {1, 1}));
}

TEST_CASE("midpoint grid stays strictly inside (0,1)") {
    const auto grid = midpoint_grid(1000);
    REQUIRE(grid.size() == 1000);
    CHECK(grid.front() == QuadReal{BigRat(1, 2000)});
    CHECK(grid.back() == QuadReal{BigRat(1999, 2000)});
    for (const auto& x : grid) {
        CHECK(x.sign() > 0);
        CHECK(x.compare(QuadReal(BigInt(1))) < 0);
    }
}
