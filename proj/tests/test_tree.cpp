#include <doctest.h>

#include <set>
#include <vector>

#include "ktree/errors.hpp"
#include "ktree/indicator.hpp"
#include "ktree/rows.hpp"
#include "ktree/tree.hpp"
#include "oracle.hpp"

using namespace ktree;

namespace {

KValue phi() { return KValue::parse("golden:1,1"); }

std::vector<KValue> tree_test_grid() {
    return {KValue::parse("3/2"),          KValue::parse("5/3"),
            KValue::parse("3"),            KValue::parse("golden:1,1"),
            KValue::parse("quad:(0,1,2,1)"), KValue::parse("golden:3,-1")};
}

}  // namespace

TEST_CASE("parent examples") {
    CHECK(parent(3, phi()) == 1);   // 3/φ ≈ 1.854
    CHECK(parent(0, phi()) == 0);   // root self-loop
    CHECK(parent(0, KValue::parse("3")) == 0);
    CHECK(parent(7, KValue::parse("3")) == 2);
    CHECK_THROWS_AS(parent(-1, phi()), InvalidParams);
}

TEST_CASE("children examples and brute-force membership") {
    const ChildRange r1 = children(1, phi());
    CHECK(r1.lo == 2);
    CHECK(r1.hi == 3);
    // brute force: exactly the c with ⌊c/φ⌋ = 1
    for (BigInt c = 0; c <= 8; ++c)
        CHECK(r1.contains(c) == (floor_div(c, phi()) == 1));

    const ChildRange r0 = children(0, KValue::parse("3"));
    CHECK(r0.lo == 0);
    CHECK(r0.hi == 2);  // h(0) = ⌈k⌉ = 3 including the root itself

    const ChildRange r2 = children(2, KValue::parse("3/2"));
    CHECK(r2.lo == 3);
    CHECK(r2.hi == 4);
}

TEST_CASE("child_count examples") {
    CHECK(child_count(1, phi()) == 2);                   // {φ} > 1 − {φ}: ceil range
    CHECK(child_count(1, KValue::parse("3/2")) == 1);    // indicator 1/2 on the floor boundary
    for (const KValue& k : tree_test_grid()) CHECK(child_count(0, k) == k.ceil_k());
}

TEST_CASE("depth examples") {
    CHECK(depth(0, phi()) == 0);
    CHECK(depth(4, KValue::parse("3/2")) == 3);  // 4 → 2 → 1 → 0
    // 12 → 7 → 4 → 2 → 1 → 0: five parent steps (12 is the leftmost node of
    // row 5; the f-table entry f_4 = 12 sits one row later than its index).
    CHECK(depth(12, phi()) == 5);
    CHECK(depth(1, phi()) == 1);
}

TEST_CASE("depth of leftmost nodes: depth(f_d) = d + 1") {
    for (const KValue& k : tree_test_grid()) {
        const std::vector<BigInt> f = leftmost_sequence(k, 12);
        for (std::size_t d = 0; d < f.size(); ++d)
            CHECK(depth(f[d], k) == static_cast<int>(d) + 1);
    }
}

TEST_CASE("build_slice examples") {
    const TreeSlice complete3 = build_slice(KValue::parse("3"), 2);
    REQUIRE(complete3.rows.size() == 3);
    CHECK(complete3.rows[0] == std::vector<BigInt>{0});
    CHECK(complete3.rows[1] == std::vector<BigInt>{1, 2});
    CHECK(complete3.rows[2] == std::vector<BigInt>{3, 4, 5, 6, 7, 8});

    const TreeSlice phi3 = build_slice(phi(), 3);
    REQUIRE(phi3.rows.size() == 4);
    CHECK(phi3.rows[0].size() == 1);
    CHECK(phi3.rows[1].size() == 1);
    CHECK(phi3.rows[2].size() == 2);
    CHECK(phi3.rows[3].size() == 3);

    const TreeSlice th4 = build_slice(KValue::parse("3/2"), 4);
    REQUIRE(th4.rows.size() == 5);
    CHECK(th4.rows[0].size() == 1);
    CHECK(th4.rows[1].size() == 1);
    CHECK(th4.rows[2].size() == 1);
    CHECK(th4.rows[3].size() == 2);
    CHECK(th4.rows[4].size() == 3);

    CHECK_THROWS_AS(build_slice(KValue::parse("3"), 10, 100), SizeLimit);
}

TEST_CASE("build_slice rows are sorted, disjoint and parent-consistent") {
    for (const KValue& k : tree_test_grid()) {
        const TreeSlice slice = build_slice(k, 7);
        std::set<BigInt> seen;
        for (std::size_t d = 0; d < slice.rows.size(); ++d) {
            const auto& row = slice.rows[d];
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i + 1 < row.size()) CHECK(row[i] < row[i + 1]);
                CHECK(seen.insert(row[i]).second);
                CHECK(depth(row[i], k) == static_cast<int>(d));
                if (d > 0) {
                    const BigInt p = parent(row[i], k);
                    const auto& prev = slice.rows[d - 1];
                    CHECK(std::binary_search(prev.begin(), prev.end(), p));
                }
            }
        }
    }
}

TEST_CASE("partition: every positive integer is the child of exactly one node") {
    for (const KValue& k : tree_test_grid()) {
        // consecutive children ranges abut exactly
        for (BigInt n = 0; n <= 2000; ++n)
            CHECK(children(n, k).hi + 1 == children(n + 1, k).lo);
        for (BigInt m = 1; m <= 10'000; ++m)
            CHECK(children(parent(m, k), k).contains(m));
    }
}

TEST_CASE("telescope: sum of h(n) for n < N equals ceil(N*k)") {
    for (const KValue& k : tree_test_grid()) {
        BigInt sum = 0;
        for (BigInt n = 0; n < 10'000; ++n) {
            sum += child_count(n, k);
            CHECK(sum == ceil_scaled(n + 1, k));
        }
    }
}

TEST_CASE("child counts take only the two values floor(k), ceil(k)") {
    for (const KValue& k : tree_test_grid()) {
        const BigInt lo = k.floor_k();
        const BigInt hi = k.ceil_k();
        for (BigInt n = 1; n <= 3000; ++n) {
            const BigInt h = child_count(n, k);
            CHECK((h == lo || h == hi));
        }
    }
}

TEST_CASE("rational k: the child-count sequence is periodic with period q") {
    for (const char* spec : {"3/2", "5/3", "7/4", "9/5"}) {
        const KValue k = KValue::parse(spec);
        const BigInt q = denominator(k.rat());
        for (BigInt n = 1; n <= 500; ++n)
            CHECK(child_count(n, k) == child_count(n + q, k));
    }
}

TEST_CASE("indicator classification agrees with range widths") {
    for (const KValue& k : tree_test_grid())
        for (BigInt n = 1; n <= 2000; ++n)
            CHECK(predicted_child_count(n, k) == child_count(n, k));
}
