#include "partita/constraint.hpp"

#include <algorithm>
#include <stdexcept>

namespace partita {

bool ConstraintSpec::MultRule::allows(std::int64_t mult) const {
    if (mult == 0) return true;
    if (step == 0) return cap == -1 || mult <= cap;
    return mult % step == 0 && mult / step >= 1 && mult / step <= count;
}

std::int64_t ConstraintSpec::MultRule::max_mult(std::int64_t size, std::int64_t budget) const {
    std::int64_t fit = budget / size;
    if (step == 0) return cap == -1 ? fit : std::min(cap, fit);
    std::int64_t j = std::min(count, fit / step);
    return j * step;
}

ConstraintSpec ConstraintSpec::all() { return {}; }

ConstraintSpec ConstraintSpec::b_family(std::int64_t p, std::int64_t k) {
    if (p < 2 || k < 2) throw std::invalid_argument("b_family needs p >= 2 and k >= 2");
    ConstraintSpec s;
    s.regular_modulus_ = p;
    s.max_multiplicity_ = k - 1;
    s.label_ = "B(" + std::to_string(p) + "," + std::to_string(k) + ")";
    s.params_ = {{"p", p}, {"k", k}};
    return s;
}

ConstraintSpec ConstraintSpec::c_family(std::int64_t k, std::int64_t p) {
    if (p < 2 || k < 2) throw std::invalid_argument("c_family needs k >= 2 and p >= 2");
    ConstraintSpec s;
    s.regular_modulus_ = k;
    s.max_multiplicity_ = p - 1;
    s.label_ = "C(" + std::to_string(k) + "," + std::to_string(p) + ")";
    s.params_ = {{"k", k}, {"p", p}};
    return s;
}

ConstraintSpec ConstraintSpec::r_family(std::int64_t k) {
    if (k < 2) throw std::invalid_argument("r_family needs k >= 2");
    ConstraintSpec s;
    s.max_multiplicity_ = k - 1;
    s.label_ = "R(" + std::to_string(k) + ")";
    s.params_ = {{"k", k}};
    return s;
}

ConstraintSpec ConstraintSpec::f_family(std::int64_t p, std::int64_t t) {
    if (p < 2 || t < 1) throw std::invalid_argument("f_family needs p >= 2 and t >= 1");
    ConstraintSpec s;
    s.f_rule_ = FRule{p, t};
    s.label_ = "F(" + std::to_string(p) + "," + std::to_string(t) + ")";
    s.params_ = {{"p", p}, {"t", t}};
    return s;
}

ConstraintSpec ConstraintSpec::distinct_parts() {
    ConstraintSpec s;
    s.distinct_ = true;
    s.label_ = "distinct";
    return s;
}

ConstraintSpec ConstraintSpec::distinct_odd() {
    ConstraintSpec s;
    s.distinct_ = true;
    s.odd_only_ = true;
    s.label_ = "distinct-odd";
    return s;
}

ConstraintSpec ConstraintSpec::self_conjugate() {
    ConstraintSpec s;
    s.shape_ = Shape::SelfConjugate;
    s.label_ = "self-conjugate";
    return s;
}

ConstraintSpec ConstraintSpec::symmetric(const SymmetricProfile& profile) {
    ConstraintSpec s;
    s.shape_ = Shape::Symmetric;
    s.profile_ = profile;
    s.label_ = "symmetric(" + std::to_string(profile.mu) + "," +
               std::to_string(profile.gamma) + ")";
    s.params_ = {{"mu", profile.mu}, {"gamma", profile.gamma}};
    return s;
}

ConstraintSpec ConstraintSpec::distinct_residue(const SymmetricProfile& profile) {
    ConstraintSpec s;
    s.distinct_ = true;
    s.min_part_ = profile.gamma + 1;
    ResidueFilter f;
    f.modulus = profile.mu;
    std::int64_t keep = (1 + profile.gamma) % profile.mu;
    for (std::int64_t r = 0; r < profile.mu; ++r) {
        if (r != keep) f.residues.insert(r);
    }
    s.forbidden_ = std::move(f);
    s.label_ = "distinct-residue(" + std::to_string(profile.mu) + "," +
               std::to_string(profile.gamma) + ")";
    s.params_ = {{"mu", profile.mu}, {"gamma", profile.gamma}};
    return s;
}

ConstraintSpec ConstraintSpec::mod9_avoiding(std::int64_t i) {
    if (i < 1 || i > 8) throw std::invalid_argument("mod9_avoiding needs 1 <= i <= 8");
    // {0, ±i (mod 9)} materializes as {0, i, 9-i}
    return residue_avoiding(9, {0, i % 9, (9 - i) % 9},
                            "mod9-avoiding(" + std::to_string(i) + ")");
}

ConstraintSpec ConstraintSpec::slater1_family() {
    return residue_avoiding(16, {0, 1, 6, 7, 8, 9, 10, 15}, "slater1-family");
}

ConstraintSpec ConstraintSpec::slater2_family() {
    return residue_avoiding(16, {0, 2, 3, 5, 8, 11, 13, 14}, "slater2-family");
}

ConstraintSpec ConstraintSpec::residue_avoiding(std::int64_t modulus,
                                                std::set<std::int64_t> residues,
                                                std::string label) {
    if (modulus < 2) throw std::invalid_argument("residue_avoiding needs modulus >= 2");
    for (std::int64_t r : residues) {
        if (r < 0 || r >= modulus) {
            throw std::invalid_argument("residue " + std::to_string(r) +
                                        " is outside [0, " + std::to_string(modulus) + ")");
        }
    }
    ConstraintSpec s;
    s.forbidden_ = ResidueFilter{modulus, std::move(residues)};
    s.label_ = label.empty() ? "residue-avoiding(" + std::to_string(modulus) + ")"
                             : std::move(label);
    return s;
}

ConstraintSpec::MultRule ConstraintSpec::multiplicity_rule(std::int64_t size) const {
    MultRule none{0, 0, 0};
    if (size < 1) return none;
    if (min_part_ && size < *min_part_) return none;
    if (odd_only_ && size % 2 == 0) return none;
    if (regular_modulus_ && size % *regular_modulus_ == 0) return none;
    if (forbidden_ && forbidden_->residues.count(size % forbidden_->modulus)) return none;

    std::int64_t cap = -1;
    auto tighten = [&cap](std::int64_t c) { cap = cap == -1 ? c : std::min(cap, c); };
    if (max_multiplicity_) tighten(*max_multiplicity_);
    if (distinct_) tighten(1);

    if (f_rule_) {
        if (size % f_rule_->p == 0) {
            std::int64_t count = f_rule_->p - 1;
            if (cap != -1) count = std::min(count, cap / f_rule_->t);
            return MultRule{-1, f_rule_->t, count};
        }
        tighten(f_rule_->p * f_rule_->t - 1);
    }
    return MultRule{cap, 0, 0};
}

bool ConstraintSpec::matches(const Partition& p) const {
    for (const auto& [size, mult] : p.multiplicities()) {
        if (!multiplicity_rule(size).allows(mult)) return false;
    }
    switch (shape_) {
        case Shape::None: return true;
        case Shape::SelfConjugate: return p.conjugate() == p;
        case Shape::Symmetric: return is_symmetric(p, *profile_);
    }
    return true;
}

} // namespace partita
