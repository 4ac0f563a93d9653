#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "partita/partition.hpp"
#include "partita/symmetric.hpp"

namespace partita {

/// A declarative description of a partition family. Clauses compose
/// conjunctively and membership is a pure predicate of the part list.
///
/// Per-size clauses (part regularity, multiplicity bounds, residue filters,
/// the dilated-multiplicity rule of the F families) reduce to an allowed
/// multiplicity set per part size, which drives enumeration, the counting
/// DP and the generating-function builder. The self-conjugate and
/// (mu,gamma)-symmetric families additionally carry a whole-shape clause.
class ConstraintSpec {
public:
    /// Forbidden part residues: parts x with x mod modulus in residues are excluded.
    struct ResidueFilter {
        std::int64_t modulus = 0;
        std::set<std::int64_t> residues;
    };

    /// Parts divisible by p must appear with multiplicity j*t (1 <= j <= p-1);
    /// all other parts appear at most p*t - 1 times.
    struct FRule {
        std::int64_t p = 0;
        std::int64_t t = 0;
    };

    enum class Shape { None, SelfConjugate, Symmetric };

    /// Allowed multiplicities for one part size. step == 0: the contiguous
    /// range 0..cap (cap == -1 means unbounded). step > 0: the set
    /// {0, step, 2*step, ..., count*step}.
    struct MultRule {
        std::int64_t cap = -1;
        std::int64_t step = 0;
        std::int64_t count = 0;

        bool forbidden() const { return step == 0 ? cap == 0 : count == 0; }
        bool allows(std::int64_t mult) const;
        /// Largest allowed multiplicity m with m*size <= budget; 0 if none.
        std::int64_t max_mult(std::int64_t size, std::int64_t budget) const;
    };

    ConstraintSpec() = default;

    // --- named families ---
    static ConstraintSpec all();
    /// Parts not divisible by p, each appearing at most k-1 times.
    static ConstraintSpec b_family(std::int64_t p, std::int64_t k);
    /// Parts not divisible by k, each appearing at most p-1 times.
    static ConstraintSpec c_family(std::int64_t k, std::int64_t p);
    /// Every part appears at most k-1 times.
    static ConstraintSpec r_family(std::int64_t k);
    /// The dilated-multiplicity family F(p,t).
    static ConstraintSpec f_family(std::int64_t p, std::int64_t t);
    static ConstraintSpec distinct_parts();
    static ConstraintSpec distinct_odd();
    static ConstraintSpec self_conjugate();
    static ConstraintSpec symmetric(const SymmetricProfile& profile);
    /// Distinct parts congruent to 1+gamma (mod mu), smallest part >= gamma+1.
    static ConstraintSpec distinct_residue(const SymmetricProfile& profile);
    /// Parts not congruent to 0, +-i (mod 9).
    static ConstraintSpec mod9_avoiding(std::int64_t i);
    /// Parts not congruent to 0, +-1, +-6, +-7, 8 (mod 16) — the product side
    /// of the first Slater identity used here.
    static ConstraintSpec slater1_family();
    /// Parts not congruent to 0, +-2, +-3, +-5, 8 (mod 16).
    static ConstraintSpec slater2_family();
    /// Generic residue-avoidance family (residues taken mod `modulus`).
    static ConstraintSpec residue_avoiding(std::int64_t modulus,
                                           std::set<std::int64_t> residues,
                                           std::string label = "");

    bool matches(const Partition& p) const;
    MultRule multiplicity_rule(std::int64_t size) const;

    Shape shape() const { return shape_; }
    const std::optional<SymmetricProfile>& profile() const { return profile_; }
    /// True when membership is decided by per-size multiplicity rules alone,
    /// i.e. the counting DP applies directly.
    bool separable() const { return shape_ == Shape::None; }

    const std::string& label() const { return label_; }
    const std::map<std::string, std::int64_t>& params() const { return params_; }

private:
    std::optional<std::int64_t> regular_modulus_; // exclude parts ≡ 0 (mod it)
    std::optional<std::int64_t> max_multiplicity_;
    std::optional<std::int64_t> min_part_;
    std::optional<ResidueFilter> forbidden_;
    std::optional<FRule> f_rule_;
    bool distinct_ = false;
    bool odd_only_ = false;
    Shape shape_ = Shape::None;
    std::optional<SymmetricProfile> profile_;
    std::string label_ = "all";
    std::map<std::string, std::int64_t> params_;
};

/// Convenience free function matching the operation name used throughout.
inline bool satisfies(const Partition& p, const ConstraintSpec& spec) {
    return spec.matches(p);
}

} // namespace partita
