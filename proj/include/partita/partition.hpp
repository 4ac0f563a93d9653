#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace partita {

/// An integer partition: weakly decreasing positive parts. Values are
/// immutable after construction; the empty partition is the unique
/// partition of 0. Equality and ordering are lexicographic on part lists.
class Partition {
public:
    Partition() = default;

    /// Builds the partition with the same multiset of parts, sorted weakly
    /// decreasing. Throws std::invalid_argument on zero or negative entries.
    static Partition canonicalize(std::vector<std::int64_t> raw);

    /// Trusted constructor for a list that is already weakly decreasing and
    /// strictly positive (checked only by assertion).
    static Partition from_sorted(std::vector<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t weight() const { return weight_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    std::int64_t part(std::size_t i) const { return parts_[i]; } // 0-based
    std::int64_t largest() const { return parts_.empty() ? 0 : parts_.front(); }

    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

    struct MultEntry {
        std::int64_t size;
        std::int64_t multiplicity;
        bool operator==(const MultEntry&) const = default;
    };

    /// Derived projection: (part size, multiplicity) pairs with sizes strictly
    /// decreasing. Expanding the view reproduces the partition exactly.
    std::vector<MultEntry> multiplicities() const;

    /// Young-diagram transpose.
    Partition conjugate() const;

    /// max{i : lambda_i >= i}, the Durfee-square side; 0 for the empty partition.
    std::int64_t order() const;

    /// Number of distinct part sizes that are even.
    std::int64_t distinct_even_part_count() const;

    /// Comma-separated decreasing parts, e.g. "4,2,2,1" or "4,2^2,1" with
    /// exponent shorthand. The empty partition renders as "".
    std::string str(bool exponent_form = false) const;

private:
    std::vector<std::int64_t> parts_;
    std::int64_t weight_ = 0;
};

/// The multiplicity form of a partition.
using MultiplicityView = std::vector<Partition::MultEntry>;

/// Rebuilds a Partition from multiplicity entries (sizes need not be sorted;
/// multiplicities must be positive).
Partition expand(const MultiplicityView& view);

/// Parses "part(^mult)?(,part(^mult)?)*" with parts weakly decreasing; the
/// empty string is the empty partition. Throws std::invalid_argument citing
/// the offending token.
Partition parse_partition(std::string_view text);

} // namespace partita
