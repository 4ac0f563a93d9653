#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partita/bigint.hpp"
#include "partita/constraint.hpp"
#include "partita/report.hpp"
#include "partita/symmetric.hpp"

namespace partita {

/// Dense integer polynomial in the auxiliary variable t.
class TPoly {
public:
    TPoly() = default; // zero
    explicit TPoly(BigInt constant);
    static TPoly term(BigInt coeff, std::int64_t power);

    bool is_zero() const { return c_.empty(); }
    std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
    const BigInt& coeff(std::int64_t i) const;
    /// The value of a constant polynomial; throws if degree > 0.
    const BigInt& value() const;

    /// this += sign * t^shift * other, dropping t-powers above t_cap.
    void add_shifted(const TPoly& other, int sign, std::int64_t shift, std::int64_t t_cap);
    void truncate(std::int64_t t_cap);

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    bool operator==(const TPoly&) const = default;

    std::string str() const; // "0", "5", "1+t", "2*t^3-1", ...

private:
    std::vector<BigInt> c_; // c_[i] = coefficient of t^i, no trailing zeros
    void normalize();
};

/// Formal power series in q truncated at a fixed order N: coefficients of
/// q^0..q^N are exact, higher powers are dropped. Coefficients are integer
/// polynomials in t, truncated at their own cap (defaults to N). Binary
/// operations combine at the minimum truncation order.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::int64_t order, std::int64_t t_order = -1);
    static TruncatedSeries one(std::int64_t order, std::int64_t t_order = -1);
    static TruncatedSeries monomial(std::int64_t order, std::int64_t q_exp, TPoly coeff,
                                    std::int64_t t_order = -1);

    std::int64_t order() const { return order_; }
    std::int64_t t_order() const { return t_order_; }
    const TPoly& coeff(std::int64_t n) const;
    /// Integer value of a t-free coefficient.
    const BigInt& coeff_value(std::int64_t n) const { return coeff(n).value(); }
    void set_coeff(std::int64_t n, TPoly c);
    void add_coeff(std::int64_t n, const TPoly& c);

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    /// Exact convolution up to the common truncation order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);

    /// Equal iff the orders agree and every coefficient agrees.
    bool operator==(const TruncatedSeries& o) const;

    void mul_scalar(const BigInt& a);
    /// In-place multiplication by (1 + sign * t^t_pow * q^q_pow), q_pow >= 0.
    void mul_binomial(int sign, std::int64_t t_pow, std::int64_t q_pow);
    /// In-place multiplication by 1/(1 + sign * t^t_pow * q^q_pow); requires
    /// q_pow >= 1, or q_pow == 0 with t_pow >= 1 (geometric expansion in t).
    void mul_inv_binomial(int sign, std::int64_t t_pow, std::int64_t q_pow);
    /// In-place multiplication by 1 + sum of q^e over the given positive exponents.
    void mul_one_plus_powers(const std::vector<std::int64_t>& exponents);

    /// The series times q^k, same truncation order (top coefficients drop off).
    TruncatedSeries shifted(std::int64_t q_exp) const;

    /// Extracts sum_n coeff(d n + r) q^n, truncated at floor((N - r)/d).
    TruncatedSeries dissected(std::int64_t d, std::int64_t r) const;

    /// "c0 + c1*q + c2*q^2 + ..." up to display_order (default: full order).
    std::string str(std::int64_t display_order = -1) const;
    /// {"order": N, "coeffs": ["...", ...]} with decimal-string coefficients.
    std::string to_json() const;

private:
    std::int64_t order_;
    std::int64_t t_order_;
    std::vector<TPoly> c_;
};

/// Smallest n (up to the common truncation) where the two series differ.
std::optional<std::int64_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b);

/// A finite list of factor families prod_{n>=0} (1 + sign t^c q^{a+bn})^{±1}.
struct ProductSpec {
    struct Factor {
        int sign;            // ±1 inside the binomial
        std::int64_t t_pow;  // c
        std::int64_t offset; // a >= 0
        std::int64_t step;   // b >= 1
        int exponent;        // ±1
    };
    std::vector<Factor> factors;

    ProductSpec& times(int sign, std::int64_t offset, std::int64_t step, int exponent = 1,
                       std::int64_t t_pow = 0);
};

/// Expands the product exactly to order N. Factors whose lowest exponent
/// exceeds N are skipped. Throws std::invalid_argument on ill-formed specs
/// (in particular exponent -1 with offset 0 and no t-power).
TruncatedSeries pochhammer(const ProductSpec& spec, std::int64_t N);

/// 1 + sum_{n>=1} (-1)^n (q^{n(3n-1)/2} + q^{n(3n+1)/2}).
TruncatedSeries theta_pentagonal(std::int64_t N);

/// 1 + 2 sum_{n>=1} (-1)^n q^{n^2}.
TruncatedSeries theta_gauss(std::int64_t N);

/// The bilateral theta sum sum_{n in Z} w^n q^{n(n+1)/2} at w = sign * q^m,
/// normalized by q^{m(m+1)/2} so every exponent is nonnegative (for m = 0 the
/// normalization is trivial). Requires m >= 0 and sign = ±1.
TruncatedSeries jacobi_triple(std::int64_t m, int sign, std::int64_t N);

/// The identically normalized product side
/// prod (1-q^n)(1 + w q^n)(1 + w^{-1} q^{n-1}) at w = sign * q^m.
TruncatedSeries jacobi_triple_product(std::int64_t m, int sign, std::int64_t N);

/// Compares both sides of the bivariate expansion
/// sum_n t^n q^{n(n-1)/2} / (q;q)_n = prod_{n>=0} (1 + t q^n)
/// with q-order and t-degree bounded by max_total_order.
VerificationReport euler_q1_check(std::int64_t max_total_order);

/// Generating series of a family: coefficient of q^n is the number of
/// partitions of n in the family. Separable specs expand their per-size
/// factors; the self-conjugate family uses its Durfee-square sum; symmetric
/// profiles use the head/tail weight sum.
TruncatedSeries gf(const ConstraintSpec& spec, std::int64_t N);

/// sum_n q^{mu n(n-1)/2 + n(gamma+1)} / (q^mu; q^mu)_n — the symmetric-class series.
TruncatedSeries gf_symmetric_sum(const SymmetricProfile& profile, std::int64_t N);

/// Even/odd-order subsums of the symmetric-class series.
TruncatedSeries gf_even_order_sum(const SymmetricProfile& profile, std::int64_t N);
TruncatedSeries gf_odd_order_sum(const SymmetricProfile& profile, std::int64_t N);

/// Rogers-Ramanujan-type sums and their Slater product forms.
TruncatedSeries gf_slater1_sum(std::int64_t N);     // sum q^{2n^2}/(q;q)_{2n}
TruncatedSeries gf_slater1_product(std::int64_t N);
TruncatedSeries gf_slater2_sum(std::int64_t N);     // sum q^{2n(n+1)}/(q;q)_{2n+1}
TruncatedSeries gf_slater2_product(std::int64_t N);

/// The three components of the 3-dissection of the distinct 3-regular series,
/// with exponents as printed (component r is supported on 3Z + r).
TruncatedSeries gf_three_dissection_component_raw(int r, std::int64_t N);

/// The same components after extracting the progression (q^{1/3} reindex),
/// directly comparable with gf(...).dissected(3, r).
TruncatedSeries gf_three_dissection_component(int r, std::int64_t N);

} // namespace partita
