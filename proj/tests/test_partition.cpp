#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "partita/constraint.hpp"
#include "partita/enumerate.hpp"
#include "partita/partition.hpp"

using namespace partita;

namespace {
Partition P(std::vector<std::int64_t> parts) { return Partition::canonicalize(std::move(parts)); }
}

TEST_CASE("canonicalize sorts and validates") {
    CHECK(P({1, 5, 1}).parts() == std::vector<std::int64_t>{5, 1, 1});
    CHECK(P({}).parts().empty());
    CHECK(P({}).weight() == 0);
    CHECK(P({2, 2, 4}).parts() == std::vector<std::int64_t>{4, 2, 2});
    CHECK(P({2, 2, 4}).weight() == 8);
    CHECK_THROWS_AS(P({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(P({-2}), std::invalid_argument);
}

TEST_CASE("conjugate examples") {
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    CHECK(P({4, 2, 2, 1, 1}).conjugate() == P({5, 3, 1, 1}));
    Partition w = P({4, 3, 2, 1});
    CHECK(w.conjugate() == w); // self-conjugate witness
}

TEST_CASE("order examples") {
    CHECK(P({5, 1, 1, 1, 1, 1}).order() == 1);
    CHECK(P({3, 3, 2, 2}).order() == 2);
    CHECK(Partition().order() == 0);
}

TEST_CASE("distinct even part count") {
    CHECK(P({6, 2, 2, 1}).distinct_even_part_count() == 2);
    CHECK(P({5, 3, 1}).distinct_even_part_count() == 0);
    CHECK(P({4, 4, 4}).distinct_even_part_count() == 1);
}

TEST_CASE("multiplicity view expands back to the partition") {
    for (std::int64_t n = 0; n <= 14; ++n) {
        for (const Partition& p : enumerate_all(n, ConstraintSpec::all())) {
            auto view = p.multiplicities();
            for (std::size_t i = 1; i < view.size(); ++i) {
                CHECK(view[i - 1].size > view[i].size);
                CHECK(view[i].multiplicity > 0);
            }
            CHECK(expand(view) == p);
        }
    }
}

TEST_CASE("conjugation is a weight-preserving involution, order is transpose-invariant") {
    for (std::int64_t n = 0; n <= 25; ++n) {
        for (const Partition& p : enumerate_all(n, ConstraintSpec::all())) {
            Partition c = p.conjugate();
            CHECK(c.weight() == p.weight());
            CHECK(c.conjugate() == p);
            CHECK(c.order() == p.order());
        }
    }
}

TEST_CASE("self-conjugate spec agrees with conjugate fixed points") {
    auto sc = ConstraintSpec::self_conjugate();
    for (std::int64_t n = 0; n <= 25; ++n) {
        for (const Partition& p : enumerate_all(n, ConstraintSpec::all())) {
            CHECK(satisfies(p, sc) == (p.conjugate() == p));
        }
    }
}

TEST_CASE("satisfies examples") {
    CHECK(satisfies(P({5, 1}), ConstraintSpec::b_family(2, 2))); // odd and distinct
    CHECK(satisfies(P({5, 1}), ConstraintSpec::distinct_odd()));
    // part 1 appears four times but F(2,1) allows odd parts at most once
    CHECK_FALSE(satisfies(P({6, 2, 1, 1, 1, 1}), ConstraintSpec::f_family(2, 1)));
    CHECK(satisfies(P({4, 3, 2, 1}), ConstraintSpec::self_conjugate()));
    CHECK_FALSE(satisfies(P({4, 2, 2, 1, 1}), ConstraintSpec::self_conjugate()));
}

TEST_CASE("text round trip") {
    Partition p = P({4, 2, 2, 1, 1});
    CHECK(p.str() == "4,2,2,1,1");
    CHECK(p.str(true) == "4,2^2,1^2");
    CHECK(parse_partition("4,2^2,1^2") == p);
    CHECK(parse_partition("4, 2^2, 1^2") == p);
    CHECK(parse_partition("") == Partition());
    CHECK(parse_partition("10") == P({10}));
    CHECK(Partition().str() == "");
    CHECK(Partition().str(true) == "");
}

TEST_CASE("parse errors cite the offending token") {
    CHECK_THROWS_WITH_AS(parse_partition("4,x"), doctest::Contains("'x'"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1,3"), std::invalid_argument);   // increasing
    CHECK_THROWS_AS(parse_partition("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("2^"), std::invalid_argument);
}

TEST_CASE("lexicographic comparison matches part lists") {
    CHECK(P({5, 1}) > P({4, 2}));
    CHECK(P({4, 2}) > P({4, 1, 1}));
    CHECK(P({3}) > P({2, 2}));
    CHECK(Partition() < P({1}));
}
