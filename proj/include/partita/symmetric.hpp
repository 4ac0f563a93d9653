#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "partita/bigint.hpp"
#include "partita/partition.hpp"

namespace partita {

/// Parameters of the (mu, gamma)-symmetric partition class.
struct SymmetricProfile {
    std::int64_t mu;    // >= 2
    std::int64_t gamma; // >= 0

    SymmetricProfile(std::int64_t mu_, std::int64_t gamma_);
};

/// A partition split at its order s: head = (lambda_1..lambda_s), tail = the
/// multiplicity view of the remaining parts (all of size <= s).
struct HeadTail {
    std::vector<std::int64_t> head;
    MultiplicityView tail;
};

HeadTail head_tail(const Partition& p);

/// The tail a (mu,gamma)-symmetric partition must carry below the given head:
/// size s appears (mu-1)(lambda_s - s) + gamma times and size j < s appears
/// (mu-1)(lambda_j - lambda_{j+1} + 1) - 1 times; zero multiplicities are
/// represented by absence. Heads with lambda_s = s are admitted (the size-s
/// exponent degenerates to gamma). Requires a weakly decreasing head with
/// lambda_s >= s >= 1; throws std::invalid_argument otherwise.
MultiplicityView prescribed_tail(const std::vector<std::int64_t>& head,
                                 const SymmetricProfile& profile);

/// True iff p is empty or its tail beyond the order equals prescribed_tail of
/// its head.
bool is_symmetric(const Partition& p, const SymmetricProfile& profile);

/// beta_i = mu(lambda_i - i) + 1 + gamma over the head of a symmetric
/// partition; yields distinct parts congruent to 1+gamma (mod mu), each
/// >= gamma+1, of the same weight. Throws on non-symmetric input.
Partition sylvester_general(const Partition& p, const SymmetricProfile& profile);

/// Inverse map: head lambda_i = i + (beta_i - 1 - gamma)/mu plus the
/// prescribed tail. Throws if beta has repeated parts, a part with the wrong
/// residue, or a part below gamma+1.
Partition sylvester_general_inverse(const Partition& beta,
                                    const SymmetricProfile& profile);

/// All (mu,gamma)-symmetric partitions of n, produced by enumerating the
/// distinct-parts side and pulling back through the bijection; returned in
/// decreasing lexicographic order.
std::vector<Partition> generate_symmetric(std::int64_t n, const SymmetricProfile& profile);

/// Brute-force oracle: filters every partition of n by is_symmetric.
/// Exponential in n; intended for small n only.
std::vector<Partition> symmetric_partitions_by_filter(std::int64_t n,
                                                      const SymmetricProfile& profile);

/// Counts the symmetric partitions of n by parity of their order:
/// (even-order count, odd-order count). The empty partition has order 0.
std::pair<BigInt, BigInt> split_by_order_parity(std::int64_t n,
                                                const SymmetricProfile& profile);

/// Pairs (distinct-parts partition, symmetric partition) of weight n under the
/// bijection, in decreasing lexicographic order of the first column.
std::vector<std::pair<Partition, Partition>>
correspondence_table(std::int64_t n, const SymmetricProfile& profile);

} // namespace partita
