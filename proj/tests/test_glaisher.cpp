#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "partita/enumerate.hpp"
#include "partita/glaisher.hpp"

using namespace partita;

namespace {
Partition P(std::vector<std::int64_t> parts) { return Partition::canonicalize(std::move(parts)); }
}

TEST_CASE("glaisher merge examples") {
    CHECK(glaisher_merge(P({1, 1, 1}), 3) == P({3}));
    CHECK(glaisher_merge(P({5, 1}), 2) == P({5, 1}));
    CHECK(glaisher_merge(P({3, 3, 1, 1, 1, 1}), 2) == P({6, 4}));
}

TEST_CASE("glaisher split examples") {
    CHECK(glaisher_split(P({3}), 3) == P({1, 1, 1}));
    CHECK(glaisher_split(P({6, 4}), 2) == P({3, 3, 1, 1, 1, 1}));
    CHECK(glaisher_split(P({5, 1}), 2) == P({5, 1}));
}

TEST_CASE("merge bounds multiplicities, split removes divisibility; round trips") {
    for (std::int64_t k : {2, 3, 4}) {
        for (std::int64_t n = 0; n <= 18; ++n) {
            for (const Partition& p : enumerate_all(n, ConstraintSpec::all())) {
                Partition merged = glaisher_merge(p, k);
                CHECK(merged.weight() == n);
                for (const auto& e : merged.multiplicities()) CHECK(e.multiplicity < k);
                Partition split = glaisher_split(p, k);
                CHECK(split.weight() == n);
                for (const auto& e : split.multiplicities()) CHECK(e.size % k != 0);
                // Glaisher correspondence between k-regular and multiplicity < k
                bool k_regular = true, bounded = true;
                for (const auto& e : p.multiplicities()) {
                    k_regular = k_regular && e.size % k != 0;
                    bounded = bounded && e.multiplicity < k;
                }
                if (k_regular) CHECK(glaisher_split(merged, k) == p);
                if (bounded) CHECK(glaisher_merge(split, k) == p);
            }
        }
    }
}

TEST_CASE("phi examples at p=3, k=2") {
    CHECK(phi(P({5, 1}), 3, 2) == P({5, 1}));
    CHECK(phi(P({4, 2}), 3, 2) == P({3, 3}));
    std::set<Partition> image;
    for (const Partition& p : enumerate_all(6, ConstraintSpec::b_family(3, 2))) {
        image.insert(phi(p, 3, 2));
    }
    CHECK(image == std::set<Partition>{P({5, 1}), P({3, 3})});
}

TEST_CASE("phi at p=k=2 is the identity by canonical rank") {
    for (const Partition& p : enumerate_all(12, ConstraintSpec::b_family(2, 2))) {
        CHECK(phi(p, 2, 2) == p);
    }
}

TEST_CASE("phi is a bijection with exact inverse across the parameter grid") {
    for (auto [p, k] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {2, 4}, {4, 2}, {6, 4}}) {
        auto b_spec = ConstraintSpec::b_family(p, k);
        auto c_spec = ConstraintSpec::c_family(k, p);
        for (std::int64_t n = 0; n <= 18; ++n) {
            auto domain = enumerate_all(n, b_spec);
            auto codomain = enumerate_all(n, c_spec);
            std::set<Partition> image;
            for (const Partition& lambda : domain) {
                Partition mu = phi(lambda, p, k);
                CHECK(mu.weight() == n);
                CHECK(satisfies(mu, c_spec));
                CHECK(phi_inverse(mu, p, k) == lambda);
                image.insert(mu);
            }
            CHECK(image.size() == domain.size()); // injective
            CHECK(image.size() == codomain.size());
            for (const Partition& mu : codomain) {
                CHECK(phi(phi_inverse(mu, p, k), p, k) == mu);
            }
        }
    }
}

TEST_CASE("phi rejects partitions outside its domain") {
    CHECK_THROWS_AS(phi(P({3}), 3, 2), std::invalid_argument);       // part divisible by 3
    CHECK_THROWS_AS(phi(P({1, 1}), 3, 2), std::invalid_argument);    // multiplicity 2
    CHECK_THROWS_AS(phi_inverse(P({2}), 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(phi(P({1}), 1, 2), std::invalid_argument);
}

TEST_CASE("f_to_r is the identity on distinct partitions when p=2, t=1") {
    for (std::int64_t n = 0; n <= 20; ++n) {
        for (const Partition& p : enumerate_all(n, ConstraintSpec::f_family(2, 1))) {
            CHECK(f_to_r(p, 2, 1) == p);
        }
    }
}

TEST_CASE("f_to_r worked example and empty case") {
    CHECK(f_to_r(P({2, 2, 1}), 2, 2) == P({4, 1}));
    CHECK(f_to_r(Partition(), 3, 2) == Partition());
    CHECK(r_to_f(Partition(), 3, 2) == Partition());
    CHECK(r_to_f(P({4, 1}), 2, 2) == P({2, 2, 1}));
}

TEST_CASE("f_to_r and r_to_f are mutually inverse bijections") {
    for (auto [p, t] : {std::pair{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
        auto f_spec = ConstraintSpec::f_family(p, t);
        auto r_spec = ConstraintSpec::r_family(p);
        for (std::int64_t n = 0; n <= 18; ++n) {
            auto domain = enumerate_all(n, f_spec);
            std::set<Partition> image;
            for (const Partition& lambda : domain) {
                Partition mu = f_to_r(lambda, p, t);
                CHECK(mu.weight() == n);
                CHECK(satisfies(mu, r_spec));
                CHECK(r_to_f(mu, p, t) == lambda);
                image.insert(mu);
            }
            CHECK(image.size() == domain.size());
            CHECK(image.size() == enumerate_all(n, r_spec).size());
        }
    }
}

TEST_CASE("f_to_r rejects non-members") {
    CHECK_THROWS_AS(f_to_r(P({2}), 2, 2), std::invalid_argument);    // even part needs mult 2
    CHECK_THROWS_AS(r_to_f(P({1, 1, 1}), 3, 1), std::invalid_argument);
}

TEST_CASE("traces chain, preserve weight, and serialize to JSON lines") {
    BijectionTrace trace;
    Partition start = P({3, 3, 1, 1, 1, 1});
    Partition end = glaisher_merge(start, 2, &trace);
    REQUIRE(!trace.steps.empty());
    CHECK(trace.steps.front().before == start);
    CHECK(trace.steps.back().after == end);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        CHECK(trace.steps[i].before.weight() == trace.steps[i].after.weight());
        if (i) CHECK(trace.steps[i - 1].after == trace.steps[i].before);
    }

    std::ostringstream os;
    trace.write_jsonl(os);
    std::istringstream is(os.str());
    std::string line;
    std::size_t lines = 0;
    while (std::getline(is, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j.contains("rule"));
        CHECK(j.contains("before"));
        CHECK(j.contains("after"));
        ++lines;
    }
    CHECK(lines == trace.steps.size());
}

TEST_CASE("composite bijection traces stay connected") {
    BijectionTrace trace;
    Partition start = P({2, 2, 2, 1, 1});
    REQUIRE(satisfies(start, ConstraintSpec::f_family(2, 3)));
    Partition end = f_to_r(start, 2, 3, &trace);
    REQUIRE(!trace.steps.empty());
    CHECK(trace.steps.front().before == start);
    CHECK(trace.steps.back().after == end);
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
        CHECK(trace.steps[i - 1].after == trace.steps[i].before);
    }
}
