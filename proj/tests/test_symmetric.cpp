#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "partita/enumerate.hpp"
#include "partita/qseries.hpp"
#include "partita/symmetric.hpp"

using namespace partita;

namespace {
Partition P(std::vector<std::int64_t> parts) { return Partition::canonicalize(std::move(parts)); }
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(SymmetricProfile(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricProfile(2, -1), std::invalid_argument);
    SymmetricProfile ok(2, 0);
    CHECK(ok.mu == 2);
}

TEST_CASE("prescribed tails of the documented heads") {
    SymmetricProfile prof(2, 1);
    CHECK(prescribed_tail({5}, prof) == MultiplicityView{{1, 5}});
    CHECK(prescribed_tail({4, 2}, prof) == MultiplicityView{{2, 1}, {1, 2}});
    CHECK(prescribed_tail({3, 3}, prof) == MultiplicityView{{2, 2}});
    // lambda_s = s is admitted and can produce an empty tail
    CHECK(prescribed_tail({2, 2}, SymmetricProfile(2, 0)) == MultiplicityView{});
    CHECK_THROWS_AS(prescribed_tail({2, 1}, prof), std::invalid_argument); // lambda_s < s
    CHECK_THROWS_AS(prescribed_tail({}, prof), std::invalid_argument);
    CHECK_THROWS_AS(prescribed_tail({1, 2}, prof), std::invalid_argument); // increasing
}

TEST_CASE("head/tail split") {
    HeadTail ht = head_tail(P({4, 2, 2, 1, 1}));
    CHECK(ht.head == std::vector<std::int64_t>{4, 2});
    CHECK(ht.tail == MultiplicityView{{2, 1}, {1, 2}});
}

TEST_CASE("is_symmetric examples") {
    CHECK(is_symmetric(P({4, 2, 2, 1, 1}), SymmetricProfile(2, 1)));
    CHECK_FALSE(is_symmetric(P({4, 2, 2, 1, 1}), SymmetricProfile(2, 0)));
    CHECK(is_symmetric(Partition(), SymmetricProfile(3, 2)));
}

TEST_CASE("(2,0)-symmetric means self-conjugate") {
    SymmetricProfile prof(2, 0);
    for (std::int64_t n = 0; n <= 25; ++n) {
        for (const Partition& p : enumerate_all(n, ConstraintSpec::all())) {
            CHECK(is_symmetric(p, prof) == (p.conjugate() == p));
        }
    }
}

TEST_CASE("sylvester map reproduces the documented table at n = 10") {
    SymmetricProfile prof(2, 1);
    CHECK(sylvester_general(P({5, 1, 1, 1, 1, 1}), prof) == P({10}));
    CHECK(sylvester_general(P({4, 2, 2, 1, 1}), prof) == P({8, 2}));
    CHECK(sylvester_general(P({3, 3, 2, 2}), prof) == P({6, 4}));
    CHECK(sylvester_general_inverse(P({10}), prof) == P({5, 1, 1, 1, 1, 1}));
    CHECK(sylvester_general_inverse(Partition(), prof) == Partition());

    auto table = correspondence_table(10, prof);
    REQUIRE(table.size() == 3);
    CHECK(table[0] == std::pair{P({10}), P({5, 1, 1, 1, 1, 1})});
    CHECK(table[1] == std::pair{P({8, 2}), P({4, 2, 2, 1, 1})});
    CHECK(table[2] == std::pair{P({6, 4}), P({3, 3, 2, 2})});
}

TEST_CASE("sylvester map validation") {
    SymmetricProfile prof(2, 1);
    CHECK_THROWS_AS(sylvester_general(P({4, 1}), prof), std::invalid_argument);
    CHECK_THROWS_AS(sylvester_general_inverse(P({4, 4}), prof), std::invalid_argument);
    CHECK_THROWS_AS(sylvester_general_inverse(P({5}), prof), std::invalid_argument);
    // part below gamma+1 with the right residue
    CHECK_THROWS_AS(sylvester_general_inverse(P({1}), SymmetricProfile(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("profile (2,0) reproduces the classical self-conjugate bijection") {
    SymmetricProfile prof(2, 0);
    for (std::int64_t n = 0; n <= 25; ++n) {
        for (const Partition& p : enumerate_all(n, ConstraintSpec::self_conjugate())) {
            Partition beta = sylvester_general(p, prof);
            std::vector<std::int64_t> expected;
            for (std::int64_t i = 1; i <= p.order(); ++i) {
                expected.push_back(2 * p.part(static_cast<std::size_t>(i - 1)) - 2 * i + 1);
            }
            CHECK(beta == Partition::from_sorted(std::move(expected)));
        }
    }
}

TEST_CASE("generation through the bijection equals brute-force filtering") {
    for (std::int64_t mu = 2; mu <= 5; ++mu) {
        for (std::int64_t gamma = 0; gamma <= 3; ++gamma) {
            SymmetricProfile prof(mu, gamma);
            for (std::int64_t n = 0; n <= 22; ++n) {
                CHECK(generate_symmetric(n, prof) == symmetric_partitions_by_filter(n, prof));
            }
        }
    }
}

TEST_CASE("documented generation examples") {
    auto sym10 = generate_symmetric(10, SymmetricProfile(2, 1));
    REQUIRE(sym10.size() == 3);
    CHECK(sym10[0] == P({5, 1, 1, 1, 1, 1}));
    CHECK(sym10[1] == P({4, 2, 2, 1, 1}));
    CHECK(sym10[2] == P({3, 3, 2, 2}));
    auto empty = generate_symmetric(0, SymmetricProfile(4, 2));
    REQUIRE(empty.size() == 1);
    CHECK(empty[0] == Partition());
}

TEST_CASE("round trips across the profile grid") {
    for (std::int64_t mu = 2; mu <= 4; ++mu) {
        for (std::int64_t gamma = 0; gamma <= 2; ++gamma) {
            SymmetricProfile prof(mu, gamma);
            for (std::int64_t n = 0; n <= 25; ++n) {
                enumerate(n, ConstraintSpec::distinct_residue(prof), [&](const Partition& beta) {
                    Partition lambda = sylvester_general_inverse(beta, prof);
                    CHECK(lambda.weight() == n);
                    CHECK(is_symmetric(lambda, prof));
                    CHECK(sylvester_general(lambda, prof) == beta);
                    return true;
                });
            }
        }
    }
}

TEST_CASE("consecutive image parts differ by at least mu") {
    for (std::int64_t mu = 2; mu <= 4; ++mu) {
        SymmetricProfile prof(mu, 1);
        for (std::int64_t n = 0; n <= 20; ++n) {
            for (const Partition& p : generate_symmetric(n, prof)) {
                Partition beta = sylvester_general(p, prof);
                for (std::size_t i = 1; i < beta.length(); ++i) {
                    CHECK(beta.part(i - 1) - beta.part(i) >= mu);
                }
            }
        }
    }
}

TEST_CASE("order-parity subseries match the actual order statistics") {
    for (auto [mu, gamma] : {std::pair<std::int64_t, std::int64_t>{2, 0}, {2, 1}, {3, 1}}) {
        SymmetricProfile prof(mu, gamma);
        TruncatedSeries even = gf_even_order_sum(prof, 100);
        TruncatedSeries odd = gf_odd_order_sum(prof, 100);
        for (std::int64_t n = 0; n <= 100; ++n) {
            auto [even_count, odd_count] = split_by_order_parity(n, prof);
            CHECK(even.coeff_value(n) == even_count);
            CHECK(odd.coeff_value(n) == odd_count);
        }
    }
}

TEST_CASE("order-parity split") {
    auto [even0, odd0] = split_by_order_parity(0, SymmetricProfile(2, 0));
    CHECK(even0 == 1);
    CHECK(odd0 == 0);

    auto [even12, odd12] = split_by_order_parity(12, SymmetricProfile(2, 0));
    CHECK(even12 == 3);
    std::vector<Partition> even_set;
    for (const Partition& p : generate_symmetric(12, SymmetricProfile(2, 0))) {
        if (p.order() % 2 == 0) even_set.push_back(p);
    }
    CHECK(even_set == std::vector<Partition>{P({6, 2, 1, 1, 1, 1}), P({5, 3, 2, 1, 1}),
                                             P({4, 4, 2, 2})});

    SymmetricProfile prof(3, 1);
    for (std::int64_t n = 0; n <= 40; ++n) {
        auto [even, odd] = split_by_order_parity(n, prof);
        BigInt total = even + odd;
        CHECK(total == BigInt(generate_symmetric(n, prof).size()));
    }
}
