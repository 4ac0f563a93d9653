#pragma once

#include <cstdint>
#include <vector>

#include "partita/report.hpp"

namespace partita::verify {

/// Grid-wide defaults; individual suites take explicit orders.
struct Options {
    std::int64_t series_order = 300; // truncation order for series checks
    std::int64_t enum_order = 40;    // weight cap for enumeration cross-checks
};

/// Distinct parts not divisible by 3 vs odd parts appearing at most twice.
VerificationReport alladi_schur(std::int64_t N, std::int64_t enum_cap = 40);

/// b(n,p,k) = c(n,k,p): parts not divisible by p appearing at most k-1 times
/// vs parts not divisible by k appearing at most p-1 times.
VerificationReport glaisher_duality(std::int64_t N, std::int64_t p, std::int64_t k,
                                    std::int64_t enum_cap = 40);

/// f(n,p,t) = r(n,p), including the explicit bijection round-trip.
VerificationReport f_equals_r(std::int64_t N, std::int64_t p, std::int64_t t,
                              std::int64_t enum_cap = 40, std::int64_t roundtrip_cap = 25);

/// sum_{t=1..ell} f(n,p,t) = ell * r(n,p), and its divisibility by ell.
VerificationReport f_sum_divisibility(std::int64_t N, std::int64_t p, std::int64_t ell);

/// f_o(n,t) = sum_j (-1)^{j+1} d(n - 2 t j^2).
VerificationReport fo_recurrence(std::int64_t N, std::int64_t t);

/// The 3-dissection of the distinct 3-regular series against its printed
/// product components, and the mod-2 congruences against the mod-9
/// residue-avoiding families.
VerificationReport three_dissection(std::int64_t N, std::int64_t parity_cap = 150,
                                    std::int64_t enum_cap = 40);

/// g(n,mu,gamma) equals the count of partitions into distinct parts congruent
/// to 1+gamma (mod mu) with least part >= gamma+1; sum form vs product form;
/// bijection round-trip.
VerificationReport generalized_sylvester(std::int64_t N, std::int64_t mu, std::int64_t gamma,
                                         std::int64_t enum_cap = 30,
                                         std::int64_t roundtrip_cap = 40);

/// g_e(alpha n, alpha, alpha/2 - 1) equals the count of partitions of n with
/// no part congruent to 0, ±1, ±6, ±7, 8 (mod 16). Requires alpha even.
VerificationReport even_order_mod16(std::int64_t N, std::int64_t alpha,
                                    std::int64_t enum_cap = 40);

/// g_o(alpha n + alpha/2, alpha, alpha/2 - 1) equals the count of partitions
/// of n with no part congruent to 0, ±2, ±3, ±5, 8 (mod 16).
VerificationReport odd_order_mod16(std::int64_t N, std::int64_t alpha,
                                   std::int64_t enum_cap = 40);

/// The two Rogers-Ramanujan-type sum/product identities, plus the match
/// between each product and its residue family.
VerificationReport slater_identities(std::int64_t N);

/// Engine self-tests: pentagonal number theorem, the Gauss theta quotient,
/// the Jacobi triple product specializations, and the Euler product expansion.
std::vector<VerificationReport> classical_q_identities(std::int64_t N);

/// Every suite at its default parameter grid.
std::vector<VerificationReport> run_all(const Options& opts = {});

} // namespace partita::verify
