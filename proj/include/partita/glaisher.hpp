#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "partita/partition.hpp"

namespace partita {

/// Audit trail of a rewriting bijection: one entry per elementary step, each
/// weight-preserving; consecutive entries chain (step.after == next.before).
struct BijectionTrace {
    struct Step {
        std::string rule;
        Partition before;
        Partition after;
    };
    std::vector<Step> steps;

    void record(std::string rule, Partition before, Partition after);
    /// One JSON object per line: {"rule": ..., "before": ..., "after": ...}
    void write_jsonl(std::ostream& os) const;
};

/// Repeatedly replaces k equal parts a by one part k*a, largest eligible part
/// first, until every multiplicity is below k. Weight preserving.
Partition glaisher_merge(const Partition& p, std::int64_t k, BijectionTrace* trace = nullptr);

/// Repeatedly replaces a part divisible by k by k equal parts, largest first,
/// until no part is divisible by k. Weight preserving.
Partition glaisher_split(const Partition& p, std::int64_t k, BijectionTrace* trace = nullptr);

/// The bijection from B(n,p,k) (no part divisible by p, multiplicities < k)
/// onto C(n,k,p) (no part divisible by k, multiplicities < p).
///
/// For gcd(p,k) = 1 this is the deterministic closure of the rewriting rules
/// {merge p equal parts, split a part divisible by k}: at each step the
/// largest part size with an applicable rule acts, merge before split at the
/// same size. The closure is capped at 64*n steps; exceeding the budget
/// throws std::logic_error rather than looping. For gcd(p,k) > 1 the map is
/// the canonical-rank pairing: the i-th member of B(n,p,k) maps to the i-th
/// member of C(n,k,p) in decreasing lexicographic order.
Partition phi(const Partition& lambda, std::int64_t p, std::int64_t k,
              BijectionTrace* trace = nullptr);

/// Exact inverse of phi (split p, merge k / reverse rank lookup).
Partition phi_inverse(const Partition& mu, std::int64_t p, std::int64_t k,
                      BijectionTrace* trace = nullptr);

/// The bijection F(n,p,t) -> R(n,p): a part a divisible by p with multiplicity
/// j*t becomes the part t*a with multiplicity j, and the subpartition of parts
/// not divisible by p goes through phi(., p, p*t).
Partition f_to_r(const Partition& lambda, std::int64_t p, std::int64_t t,
                 BijectionTrace* trace = nullptr);

/// Inverse of f_to_r: parts divisible by p*t with multiplicity m become
/// part/t with multiplicity m*t; the rest goes through phi_inverse(., p, p*t).
Partition r_to_f(const Partition& mu, std::int64_t p, std::int64_t t,
                 BijectionTrace* trace = nullptr);

} // namespace partita
