#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "partita/bigint.hpp"
#include "partita/constraint.hpp"

namespace partita {

/// Visits every partition of n satisfying spec exactly once, in decreasing
/// lexicographic part-list order. The visitor returns false to stop early.
void enumerate(std::int64_t n, const ConstraintSpec& spec,
               const std::function<bool(const Partition&)>& visit);

std::vector<Partition> enumerate_all(std::int64_t n, const ConstraintSpec& spec);

BigInt count_by_enumeration(std::int64_t n, const ConstraintSpec& spec);

/// Exact counts for n = 0..n_max by a bounded dynamic program over
/// (part size, remaining weight). Separable specs use the per-size
/// multiplicity rules; the self-conjugate family uses its Durfee-square
/// decomposition. Throws std::invalid_argument for symmetric-profile specs,
/// which have no DP here.
std::vector<BigInt> count_table_dp(std::int64_t n_max, const ConstraintSpec& spec);
BigInt count_by_dp(std::int64_t n, const ConstraintSpec& spec);

/// Exact count; DP when available, otherwise enumeration.
BigInt count(std::int64_t n, const ConstraintSpec& spec);

/// d(n): partitions into distinct parts, for n = 0..n_max.
std::vector<BigInt> distinct_count_table(std::int64_t n_max);

/// Counts of F(n,2,t)-partitions split by the parity of the number of
/// different even part sizes, for n = 0..n_max: (even table, odd table).
std::pair<std::vector<BigInt>, std::vector<BigInt>>
fe_fo_tables(std::int64_t n_max, std::int64_t t);

BigInt count_fe(std::int64_t n, std::int64_t t);
BigInt count_fo(std::int64_t n, std::int64_t t);

/// The alternating sum over j >= 1 of (-1)^{j+1} d(n - 2 t j^2), with d(0) = 1;
/// an empty sum (n < 2t) gives 0.
BigInt corollary_fo(std::int64_t n, std::int64_t t);
BigInt corollary_fo(std::int64_t n, std::int64_t t, const std::vector<BigInt>& d_table);

/// A counted family over 0..n_max with CSV and JSON emission.
struct CountTable {
    std::string family;
    std::map<std::string, std::int64_t> params;
    std::vector<BigInt> counts; // index = n

    static CountTable build(const ConstraintSpec& spec, std::int64_t n_max);

    /// Columns: n,count
    void write_csv(std::ostream& os) const;
    /// {"family": ..., "params": {...}, "counts": ["...", ...]}
    std::string to_json() const;
};

} // namespace partita
