#include "partita/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "partita/enumerate.hpp"
#include "partita/glaisher.hpp"
#include "partita/qseries.hpp"
#include "partita/symmetric.hpp"

namespace partita::verify {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

VerificationReport make_report(std::string id, std::map<std::string, std::int64_t> params,
                               std::int64_t lo, std::int64_t hi) {
    VerificationReport r;
    r.identity = std::move(id);
    r.params = std::move(params);
    r.range_lo = lo;
    r.range_hi = hi;
    return r;
}

// Ascending scan up to the common order; the first mismatch is the minimal one.
void compare_series(VerificationReport& rep, const TruncatedSeries& lhs,
                    const TruncatedSeries& rhs, const char* check) {
    std::int64_t top = std::min(lhs.order(), rhs.order());
    for (std::int64_t n = 0; n <= top; ++n) {
        if (!(lhs.coeff(n) == rhs.coeff(n))) {
            rep.fail(n, lhs.coeff(n).str(), rhs.coeff(n).str(), check);
            return;
        }
    }
}

void check_support(VerificationReport& rep, const TruncatedSeries& s, std::int64_t modulus,
                   std::int64_t residue, const char* check) {
    for (std::int64_t n = 0; n <= s.order(); ++n) {
        if (n % modulus != residue && !s.coeff(n).is_zero()) {
            rep.fail(n, s.coeff(n).str(), "0", check);
            return;
        }
    }
}

} // namespace

VerificationReport glaisher_duality(std::int64_t N, std::int64_t p, std::int64_t k,
                                    std::int64_t enum_cap) {
    auto start = Clock::now();
    auto rep = make_report("glaisher-duality", {{"p", p}, {"k", k}}, 0, N);
    auto b_spec = ConstraintSpec::b_family(p, k);
    auto c_spec = ConstraintSpec::c_family(k, p);
    for (std::int64_t n = 0; n <= std::min(N, enum_cap); ++n) {
        rep.expect_eq(n, count_by_enumeration(n, b_spec), count_by_enumeration(n, c_spec),
                      "counts by enumeration");
    }
    compare_series(rep, gf(b_spec, N), gf(c_spec, N), "generating series");
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

VerificationReport alladi_schur(std::int64_t N, std::int64_t enum_cap) {
    auto rep = glaisher_duality(N, 3, 2, enum_cap);
    rep.identity = "alladi-schur";
    return rep;
}

VerificationReport f_equals_r(std::int64_t N, std::int64_t p, std::int64_t t,
                              std::int64_t enum_cap, std::int64_t roundtrip_cap) {
    auto start = Clock::now();
    auto rep = make_report("f-equals-r", {{"p", p}, {"t", t}}, 0, N);
    auto f_spec = ConstraintSpec::f_family(p, t);
    auto r_spec = ConstraintSpec::r_family(p);

    compare_series(rep, gf(f_spec, N), gf(r_spec, N), "generating series");
    for (std::int64_t n = 0; n <= std::min(N, enum_cap); ++n) {
        rep.expect_eq(n, count_by_enumeration(n, f_spec), count_by_enumeration(n, r_spec),
                      "counts by enumeration");
    }
    for (std::int64_t n = 0; n <= std::min(N, roundtrip_cap); ++n) {
        std::set<Partition> image;
        auto members = enumerate_all(n, f_spec);
        for (const Partition& lambda : members) {
            Partition mu = f_to_r(lambda, p, t);
            if (!r_spec.matches(mu)) {
                rep.fail(n, mu.str(), "a member of " + r_spec.label(), "image membership");
                continue;
            }
            if (r_to_f(mu, p, t) != lambda) {
                rep.fail(n, r_to_f(mu, p, t).str(), lambda.str(), "round trip");
            }
            image.insert(mu);
        }
        if (image.size() != members.size()) {
            rep.fail(n, std::to_string(image.size()), std::to_string(members.size()),
                     "injectivity");
        }
        for (const Partition& mu : enumerate_all(n, r_spec)) {
            if (f_to_r(r_to_f(mu, p, t), p, t) != mu) {
                rep.fail(n, f_to_r(r_to_f(mu, p, t), p, t).str(), mu.str(),
                         "reverse round trip");
            }
        }
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

VerificationReport f_sum_divisibility(std::int64_t N, std::int64_t p, std::int64_t ell) {
    auto start = Clock::now();
    auto rep = make_report("f-sum-divisibility", {{"p", p}, {"ell", ell}}, 0, N);
    if (ell < 1) throw std::invalid_argument("f_sum_divisibility needs ell >= 1");
    auto r_table = count_table_dp(N, ConstraintSpec::r_family(p));
    std::vector<std::vector<BigInt>> f_tables;
    for (std::int64_t t = 1; t <= ell; ++t) {
        f_tables.push_back(count_table_dp(N, ConstraintSpec::f_family(p, t)));
    }
    for (std::int64_t n = 0; n <= N; ++n) {
        BigInt sum = 0;
        for (const auto& table : f_tables) sum += table[static_cast<std::size_t>(n)];
        BigInt expected = r_table[static_cast<std::size_t>(n)] * ell;
        rep.expect_eq(n, sum, expected, "sum equals ell * r(n,p)");
        if (sum % ell != 0) {
            rep.fail(n, sum.str(), "0 (mod " + std::to_string(ell) + ")", "divisibility");
        }
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

VerificationReport fo_recurrence(std::int64_t N, std::int64_t t) {
    auto start = Clock::now();
    auto rep = make_report("fo-recurrence", {{"t", t}}, 0, N);
    auto [fe, fo] = fe_fo_tables(N, t);
    auto d_table = distinct_count_table(N);
    auto f_table = count_table_dp(N, ConstraintSpec::f_family(2, t));
    for (std::int64_t n = 0; n <= N; ++n) {
        auto u = static_cast<std::size_t>(n);
        rep.expect_eq(n, fo[u], corollary_fo(n, t, d_table), "alternating-sum recurrence");
        BigInt total = fe[u] + fo[u];
        rep.expect_eq(n, total, f_table[u], "parity split total");
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

VerificationReport three_dissection(std::int64_t N, std::int64_t parity_cap,
                                    std::int64_t enum_cap) {
    auto start = Clock::now();
    auto rep = make_report("three-dissection", {{"parity_cap", parity_cap}}, 0, N);
    auto b_spec = ConstraintSpec::b_family(3, 2);
    TruncatedSeries b_series = gf(b_spec, N);

    // the printed components, summed and individually supported on 3Z + r
    TruncatedSeries printed = gf_three_dissection_component_raw(0, N);
    for (int r = 1; r <= 2; ++r) printed += gf_three_dissection_component_raw(r, N);
    compare_series(rep, b_series, printed, "printed dissection sum");
    for (int r = 0; r <= 2; ++r) {
        check_support(rep, gf_three_dissection_component_raw(r, N), 3, r, "component support");
        compare_series(rep, b_series.dissected(3, r),
                       gf_three_dissection_component(r, (N - r) / 3), "residue component");
    }

    // parity congruences on exact counts reduced mod 2
    auto b_table = count_table_dp(3 * parity_cap + 2, b_spec);
    auto c4 = count_table_dp(parity_cap, ConstraintSpec::mod9_avoiding(4));
    auto c1 = count_table_dp(parity_cap, ConstraintSpec::mod9_avoiding(1));
    for (std::int64_t n = 0; n <= parity_cap; ++n) {
        auto u = static_cast<std::size_t>(n);
        rep.expect_eq(n, BigInt(b_table[3 * u] % 2), BigInt(c4[u] % 2),
                      "parity b(3n) = c(n,4)");
        rep.expect_eq(n, BigInt(b_table[3 * u + 2] % 2), BigInt(c1[u] % 2),
                      "parity b(3n+2) = c(n,1)");
    }
    for (std::int64_t n = 0; 3 * n + 2 <= enum_cap; ++n) {
        rep.expect_eq(n, BigInt(count_by_enumeration(3 * n, b_spec) % 2),
                      BigInt(count_by_enumeration(n, ConstraintSpec::mod9_avoiding(4)) % 2),
                      "parity b(3n) = c(n,4), enumeration");
        rep.expect_eq(n, BigInt(count_by_enumeration(3 * n + 2, b_spec) % 2),
                      BigInt(count_by_enumeration(n, ConstraintSpec::mod9_avoiding(1)) % 2),
                      "parity b(3n+2) = c(n,1), enumeration");
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

VerificationReport generalized_sylvester(std::int64_t N, std::int64_t mu, std::int64_t gamma,
                                         std::int64_t enum_cap, std::int64_t roundtrip_cap) {
    auto start = Clock::now();
    auto rep = make_report("generalized-sylvester", {{"mu", mu}, {"gamma", gamma}}, 0, N);
    SymmetricProfile profile(mu, gamma);
    auto beta_spec = ConstraintSpec::distinct_residue(profile);

    compare_series(rep, gf_symmetric_sum(profile, N), gf(beta_spec, N),
                   "sum form vs product form");
    for (std::int64_t n = 0; n <= std::min(N, enum_cap); ++n) {
        auto filtered = symmetric_partitions_by_filter(n, profile);
        auto generated = generate_symmetric(n, profile);
        if (filtered != generated) {
            rep.fail(n, std::to_string(generated.size()) + " generated",
                     std::to_string(filtered.size()) + " filtered", "generator equivalence");
        }
        rep.expect_eq(n, BigInt(filtered.size()), count_by_enumeration(n, beta_spec),
                      "symmetric count vs residue count");
    }
    for (std::int64_t n = 0; n <= std::min(N, roundtrip_cap); ++n) {
        enumerate(n, beta_spec, [&](const Partition& beta) {
            Partition lambda = sylvester_general_inverse(beta, profile);
            if (!is_symmetric(lambda, profile) || sylvester_general(lambda, profile) != beta) {
                rep.fail(n, sylvester_general(lambda, profile).str(), beta.str(), "round trip");
            }
            return true;
        });
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

namespace {

VerificationReport order_parity_mod16(const char* id, std::int64_t N, std::int64_t alpha,
                                      std::int64_t enum_cap, bool even_side) {
    auto start = Clock::now();
    auto rep = make_report(id, {{"alpha", alpha}}, 0, N);
    if (alpha < 2 || alpha % 2 != 0) {
        throw std::invalid_argument(std::string(id) + ": alpha must be even and >= 2, got " +
                                    std::to_string(alpha));
    }
    SymmetricProfile profile(alpha, alpha / 2 - 1);
    const std::int64_t shift = even_side ? 0 : alpha / 2;
    auto family = even_side ? ConstraintSpec::slater1_family() : ConstraintSpec::slater2_family();

    TruncatedSeries sum = even_side ? gf_even_order_sum(profile, alpha * N + shift)
                                    : gf_odd_order_sum(profile, alpha * N + shift);
    check_support(rep, sum, alpha, shift, "support");
    compare_series(rep, sum.dissected(alpha, shift), gf(family, N), "series");

    for (std::int64_t n = 0; alpha * n + shift <= enum_cap; ++n) {
        auto [even, odd] = split_by_order_parity(alpha * n + shift, profile);
        rep.expect_eq(n, even_side ? even : odd, count_by_enumeration(n, family),
                      "order-parity count vs residue count");
    }
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

} // namespace

VerificationReport even_order_mod16(std::int64_t N, std::int64_t alpha, std::int64_t enum_cap) {
    return order_parity_mod16("even-order-mod16", N, alpha, enum_cap, true);
}

VerificationReport odd_order_mod16(std::int64_t N, std::int64_t alpha, std::int64_t enum_cap) {
    return order_parity_mod16("odd-order-mod16", N, alpha, enum_cap, false);
}

VerificationReport slater_identities(std::int64_t N) {
    auto start = Clock::now();
    auto rep = make_report("slater", {}, 0, N);
    compare_series(rep, gf_slater1_sum(N), gf_slater1_product(N), "first identity");
    compare_series(rep, gf_slater2_sum(N), gf_slater2_product(N), "second identity");
    compare_series(rep, gf_slater1_product(N), gf(ConstraintSpec::slater1_family(), N),
                   "first product vs residue family");
    compare_series(rep, gf_slater2_product(N), gf(ConstraintSpec::slater2_family(), N),
                   "second product vs residue family");
    rep.elapsed_seconds = seconds_since(start);
    return rep;
}

std::vector<VerificationReport> classical_q_identities(std::int64_t N) {
    std::vector<VerificationReport> reports;

    {
        auto start = Clock::now();
        auto rep = make_report("pentagonal", {}, 0, N);
        ProductSpec euler;
        euler.times(-1, 1, 1);
        compare_series(rep, theta_pentagonal(N), pochhammer(euler, N), "sum vs product");
        rep.elapsed_seconds = seconds_since(start);
        reports.push_back(std::move(rep));
    }
    {
        auto start = Clock::now();
        auto rep = make_report("gauss-theta", {}, 0, N);
        ProductSpec quotient;
        quotient.times(-1, 1, 1).times(+1, 1, 1, -1);
        compare_series(rep, theta_gauss(N), pochhammer(quotient, N), "sum vs product");
        rep.elapsed_seconds = seconds_since(start);
        reports.push_back(std::move(rep));
    }
    {
        auto start = Clock::now();
        auto rep = make_report("jacobi-triple", {{"m_max", 5}}, 0, N);
        for (std::int64_t m = 0; m <= 5; ++m) {
            for (int sign : {+1, -1}) {
                TruncatedSeries lhs = jacobi_triple(m, sign, N);
                TruncatedSeries rhs = jacobi_triple_product(m, sign, N);
                std::string what = "m=" + std::to_string(m) + " sign=" +
                                   (sign > 0 ? std::string("+1") : std::string("-1"));
                std::int64_t top = std::min(lhs.order(), rhs.order());
                for (std::int64_t n = 0; n <= top; ++n) {
                    if (!(lhs.coeff(n) == rhs.coeff(n))) {
                        rep.fail(n, lhs.coeff(n).str(), rhs.coeff(n).str(), what);
                        break;
                    }
                }
            }
        }
        rep.elapsed_seconds = seconds_since(start);
        reports.push_back(std::move(rep));
    }
    reports.push_back(euler_q1_check(std::min<std::int64_t>(N, 60)));
    return reports;
}

std::vector<VerificationReport> run_all(const Options& opts) {
    const std::int64_t N = opts.series_order;
    const std::int64_t cap = opts.enum_order;
    std::vector<VerificationReport> reports = classical_q_identities(N);

    reports.push_back(alladi_schur(N, cap));
    for (auto [p, k] : {std::pair{3, 2}, {2, 3}, {2, 4}, {4, 2}, {3, 4}, {4, 6}}) {
        reports.push_back(glaisher_duality(N, p, k, cap));
    }
    for (std::int64_t p = 2; p <= 5; ++p) {
        for (std::int64_t t = 1; t <= 3; ++t) {
            reports.push_back(f_equals_r(N, p, t, cap, 25));
        }
    }
    for (std::int64_t p = 2; p <= 5; ++p) {
        for (std::int64_t ell = 2; ell <= 5; ++ell) {
            reports.push_back(f_sum_divisibility(std::min<std::int64_t>(N, 200), p, ell));
        }
    }
    for (std::int64_t t = 1; t <= 3; ++t) {
        reports.push_back(fo_recurrence(std::min<std::int64_t>(N, 200), t));
    }
    reports.push_back(three_dissection(N, 150, cap));
    for (std::int64_t mu = 2; mu <= 6; ++mu) {
        for (std::int64_t gamma = 0; gamma <= 4; ++gamma) {
            reports.push_back(
                generalized_sylvester(std::min<std::int64_t>(N, 200), mu, gamma, 30, 40));
        }
    }
    for (std::int64_t alpha : {2, 4, 6}) {
        reports.push_back(even_order_mod16(std::min<std::int64_t>(N, 150), alpha, cap));
        reports.push_back(odd_order_mod16(std::min<std::int64_t>(N, 150), alpha, cap));
    }
    reports.push_back(slater_identities(N));
    return reports;
}

} // namespace partita::verify
