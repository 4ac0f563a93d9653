#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iterator>
#include <json.hpp>
#include <sstream>

#include "partita/enumerate.hpp"
#include "partita/symmetric.hpp"

using namespace partita;

namespace {

Partition P(std::vector<std::int64_t> parts) { return Partition::canonicalize(std::move(parts)); }

std::vector<ConstraintSpec> dp_families() {
    std::vector<ConstraintSpec> specs = {
        ConstraintSpec::all(),
        ConstraintSpec::distinct_parts(),
        ConstraintSpec::distinct_odd(),
        ConstraintSpec::self_conjugate(),
        ConstraintSpec::mod9_avoiding(1),
        ConstraintSpec::mod9_avoiding(4),
        ConstraintSpec::slater1_family(),
        ConstraintSpec::slater2_family(),
        ConstraintSpec::distinct_residue(SymmetricProfile(2, 2)),
        ConstraintSpec::distinct_residue(SymmetricProfile(3, 1)),
    };
    for (auto [p, k] : {std::pair{2, 2}, {3, 2}, {2, 3}, {2, 4}, {4, 2}, {3, 4}, {4, 6}}) {
        specs.push_back(ConstraintSpec::b_family(p, k));
        specs.push_back(ConstraintSpec::c_family(k, p));
    }
    for (std::int64_t k = 2; k <= 5; ++k) specs.push_back(ConstraintSpec::r_family(k));
    for (std::int64_t p = 2; p <= 4; ++p) {
        for (std::int64_t t = 1; t <= 3; ++t) specs.push_back(ConstraintSpec::f_family(p, t));
    }
    return specs;
}

} // namespace

TEST_CASE("enumerate emits the documented sets in decreasing lexicographic order") {
    auto sym = enumerate_all(10, ConstraintSpec::symmetric(SymmetricProfile(2, 1)));
    REQUIRE(sym.size() == 3);
    CHECK(sym[0] == P({5, 1, 1, 1, 1, 1}));
    CHECK(sym[1] == P({4, 2, 2, 1, 1}));
    CHECK(sym[2] == P({3, 3, 2, 2}));

    auto mod16 = enumerate_all(6, ConstraintSpec::slater1_family());
    REQUIRE(mod16.size() == 3);
    CHECK(mod16[0] == P({4, 2}));
    CHECK(mod16[1] == P({3, 3}));
    CHECK(mod16[2] == P({2, 2, 2}));

    auto zero = enumerate_all(0, ConstraintSpec::b_family(3, 2));
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == Partition());
}

TEST_CASE("enumeration order is strictly decreasing, no duplicates") {
    for (const auto& spec : {ConstraintSpec::all(), ConstraintSpec::f_family(3, 2)}) {
        for (std::int64_t n : {9, 14}) {
            auto list = enumerate_all(n, spec);
            for (std::size_t i = 1; i < list.size(); ++i) CHECK(list[i - 1] > list[i]);
            for (const auto& p : list) {
                CHECK(p.weight() == n);
                CHECK(satisfies(p, spec));
            }
        }
    }
}

TEST_CASE("count examples") {
    CHECK(count(6, ConstraintSpec::b_family(3, 2)) == 2);
    CHECK(count(6, ConstraintSpec::c_family(2, 3)) == 2); // odd parts at most twice
    CHECK(count(12, ConstraintSpec::self_conjugate()) == 3);
    CHECK(count(12, ConstraintSpec::distinct_odd()) == 3);
    CHECK(count(0, ConstraintSpec::all()) == 1);
    CHECK(count(0, ConstraintSpec::f_family(5, 3)) == 1);
}

TEST_CASE("unrestricted counts match the classical table") {
    // p(n) for n = 0..20
    const std::int64_t expected[] = {1, 1,  2,  3,  5,  7,  11, 15,  22,  30, 42,
                                     56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    auto table = count_table_dp(20, ConstraintSpec::all());
    for (std::size_t n = 0; n < std::size(expected); ++n) CHECK(table[n] == expected[n]);
}

TEST_CASE("DP counts equal enumeration counts on every family") {
    for (const auto& spec : dp_families()) {
        auto table = count_table_dp(22, spec);
        for (std::int64_t n = 0; n <= 22; ++n) {
            CHECK_MESSAGE(table[static_cast<std::size_t>(n)] == count_by_enumeration(n, spec),
                          spec.label(), " at n=", n);
        }
    }
}

TEST_CASE("duality of counts for the whole parameter grid up to 60") {
    for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {2, 4}, {4, 2}, {6, 4}}) {
        auto b = count_table_dp(60, ConstraintSpec::b_family(p, k));
        auto c = count_table_dp(60, ConstraintSpec::c_family(k, p));
        CHECK(b == c);
    }
}

TEST_CASE("f(n,p,t) = r(n,p) for the grid up to 60") {
    for (std::int64_t p = 2; p <= 5; ++p) {
        auto r = count_table_dp(60, ConstraintSpec::r_family(p));
        for (std::int64_t t = 1; t <= 3; ++t) {
            CHECK(count_table_dp(60, ConstraintSpec::f_family(p, t)) == r);
        }
    }
}

TEST_CASE("sum over t of f(n,p,t) is ell * r(n,p)") {
    const std::int64_t ell = 4, N = 50;
    for (std::int64_t p : {2, 3}) {
        auto r = count_table_dp(N, ConstraintSpec::r_family(p));
        std::vector<BigInt> sum(N + 1, 0);
        for (std::int64_t t = 1; t <= ell; ++t) {
            auto f = count_table_dp(N, ConstraintSpec::f_family(p, t));
            for (std::size_t n = 0; n <= N; ++n) sum[n] += f[n];
        }
        for (std::size_t n = 0; n <= N; ++n) {
            CHECK(sum[n] == r[n] * ell);
            CHECK(sum[n] % ell == 0);
        }
    }
}

TEST_CASE("distinct odd equals self-conjugate up to 60") {
    CHECK(count_table_dp(60, ConstraintSpec::distinct_odd()) ==
          count_table_dp(60, ConstraintSpec::self_conjugate()));
}

TEST_CASE("even/odd split of the distinct-even-part statistic") {
    CHECK(count_fo(2, 1) == 1); // F(2,2,1) = {(2)}, one (odd) distinct even part
    CHECK(count_fe(2, 1) == 0);
    for (std::int64_t t = 1; t <= 3; ++t) {
        auto [fe, fo] = fe_fo_tables(40, t);
        auto f = count_table_dp(40, ConstraintSpec::f_family(2, t));
        for (std::size_t n = 0; n <= 40; ++n) {
            BigInt total = fe[n] + fo[n];
            CHECK(total == f[n]);
        }
        // brute-force parity split against enumeration
        for (std::int64_t n = 0; n <= 18; ++n) {
            BigInt even = 0, odd = 0;
            for (const auto& p : enumerate_all(n, ConstraintSpec::f_family(2, t))) {
                (p.distinct_even_part_count() % 2 == 0 ? even : odd) += 1;
            }
            CHECK(fe[static_cast<std::size_t>(n)] == even);
            CHECK(fo[static_cast<std::size_t>(n)] == odd);
        }
    }
}

TEST_CASE("alternating-sum recurrence for f_o") {
    CHECK(corollary_fo(2, 1) == 1); // single j = 1 term, d(0) = 1
    CHECK(corollary_fo(1, 1) == 0); // empty sum
    CHECK(corollary_fo(3, 2) == 0); // n < 2t
    for (std::int64_t t = 1; t <= 3; ++t) {
        auto d = distinct_count_table(120);
        auto [fe, fo] = fe_fo_tables(120, t);
        for (std::int64_t n = 0; n <= 120; ++n) {
            CHECK(fo[static_cast<std::size_t>(n)] == corollary_fo(n, t, d));
        }
    }
}

TEST_CASE("count table serialization") {
    CountTable table = CountTable::build(ConstraintSpec::b_family(3, 2), 6);
    std::ostringstream csv;
    table.write_csv(csv);
    CHECK(csv.str() == "n,count\n0,1\n1,1\n2,1\n3,1\n4,1\n5,2\n6,2\n");

    auto j = nlohmann::json::parse(table.to_json());
    CHECK(j["family"] == "B(3,2)");
    CHECK(j["params"]["p"] == 3);
    CHECK(j["params"]["k"] == 2);
    CHECK(j["counts"].size() == 7);
    CHECK(j["counts"][6] == "2");
}

TEST_CASE("symmetric-profile specs count via enumeration") {
    auto spec = ConstraintSpec::symmetric(SymmetricProfile(2, 1));
    CHECK(count(10, spec) == 3);
    CHECK_THROWS_AS(count_by_dp(10, spec), std::invalid_argument);
}
