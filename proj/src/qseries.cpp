#include "partita/qseries.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include <json.hpp>

namespace partita {

// ---------------------------------------------------------------------------
// TPoly
// ---------------------------------------------------------------------------

namespace {
const BigInt kZero = 0;
}

TPoly::TPoly(BigInt constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

TPoly TPoly::term(BigInt coeff, std::int64_t power) {
    TPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<std::size_t>(power) + 1, BigInt(0));
        p.c_.back() = std::move(coeff);
    }
    return p;
}

const BigInt& TPoly::coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

const BigInt& TPoly::value() const {
    if (degree() > 0) {
        throw std::logic_error("TPoly::value on a nonconstant polynomial: " + str());
    }
    return c_.empty() ? kZero : c_.front();
}

void TPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void TPoly::add_shifted(const TPoly& other, int sign, std::int64_t shift,
                        std::int64_t t_cap) {
    std::int64_t top = std::min(other.degree() + shift, t_cap);
    if (top < 0 || other.is_zero()) return;
    if (static_cast<std::int64_t>(c_.size()) <= top) {
        c_.resize(static_cast<std::size_t>(top) + 1, BigInt(0));
    }
    for (std::int64_t i = std::max<std::int64_t>(shift, 0); i <= top; ++i) {
        const BigInt& x = other.c_[static_cast<std::size_t>(i - shift)];
        if (sign > 0) c_[static_cast<std::size_t>(i)] += x;
        else c_[static_cast<std::size_t>(i)] -= x;
    }
    normalize();
}

void TPoly::truncate(std::int64_t t_cap) {
    if (t_cap < 0) {
        c_.clear();
        return;
    }
    if (static_cast<std::int64_t>(c_.size()) > t_cap + 1) {
        c_.resize(static_cast<std::size_t>(t_cap) + 1);
    }
    normalize();
}

TPoly& TPoly::operator+=(const TPoly& o) {
    add_shifted(o, +1, 0, std::max(degree(), o.degree()));
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    add_shifted(o, -1, 0, std::max(degree(), o.degree()));
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    out.normalize();
    return out;
}

std::string TPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::int64_t i = degree(); i >= 0; --i) {
        const BigInt& x = c_[static_cast<std::size_t>(i)];
        if (x == 0) continue;
        if (!out.empty()) out += x > 0 ? "+" : "-";
        else if (x < 0) out += "-";
        BigInt mag = abs(x);
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != 1) out += mag.str() + "*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// TruncatedSeries
// ---------------------------------------------------------------------------

TruncatedSeries::TruncatedSeries(std::int64_t order, std::int64_t t_order)
    : order_(order), t_order_(t_order < 0 ? order : t_order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    c_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(std::int64_t order, std::int64_t t_order) {
    TruncatedSeries s(order, t_order);
    s.c_[0] = TPoly(1);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::int64_t order, std::int64_t q_exp,
                                          TPoly coeff, std::int64_t t_order) {
    TruncatedSeries s(order, t_order);
    if (q_exp < 0) throw std::invalid_argument("negative q-exponent");
    if (q_exp <= order) {
        coeff.truncate(s.t_order_);
        s.c_[static_cast<std::size_t>(q_exp)] = std::move(coeff);
    }
    return s;
}

const TPoly& TruncatedSeries::coeff(std::int64_t n) const {
    if (n < 0 || n > order_) {
        throw std::out_of_range("coefficient index " + std::to_string(n) +
                                " outside truncation order " + std::to_string(order_));
    }
    return c_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coeff(std::int64_t n, TPoly c) {
    c.truncate(t_order_);
    c_.at(static_cast<std::size_t>(n)) = std::move(c);
}

void TruncatedSeries::add_coeff(std::int64_t n, const TPoly& c) {
    if (n < 0 || n > order_) return;
    c_[static_cast<std::size_t>(n)].add_shifted(c, +1, 0, t_order_);
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_), std::min(a.t_order_, b.t_order_));
    for (std::int64_t n = 0; n <= out.order_; ++n) {
        TPoly c = a.c_[static_cast<std::size_t>(n)];
        c.add_shifted(b.c_[static_cast<std::size_t>(n)], +1, 0, out.t_order_);
        c.truncate(out.t_order_);
        out.c_[static_cast<std::size_t>(n)] = std::move(c);
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_), std::min(a.t_order_, b.t_order_));
    for (std::int64_t n = 0; n <= out.order_; ++n) {
        TPoly c = a.c_[static_cast<std::size_t>(n)];
        c.add_shifted(b.c_[static_cast<std::size_t>(n)], -1, 0, out.t_order_);
        c.truncate(out.t_order_);
        out.c_[static_cast<std::size_t>(n)] = std::move(c);
    }
    return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries out(std::min(a.order_, b.order_), std::min(a.t_order_, b.t_order_));
    for (std::int64_t i = 0; i <= out.order_; ++i) {
        const TPoly& ai = a.c_[static_cast<std::size_t>(i)];
        if (ai.is_zero()) continue;
        for (std::int64_t j = 0; i + j <= out.order_; ++j) {
            const TPoly& bj = b.c_[static_cast<std::size_t>(j)];
            if (bj.is_zero()) continue;
            TPoly prod = ai * bj;
            prod.truncate(out.t_order_);
            out.c_[static_cast<std::size_t>(i + j)] += prod;
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries out(order_, t_order_);
    for (std::int64_t n = 0; n <= order_; ++n) {
        out.c_[static_cast<std::size_t>(n)].add_shifted(c_[static_cast<std::size_t>(n)], -1, 0,
                                                        t_order_);
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    *this = *this + o;
    return *this;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
}

void TruncatedSeries::mul_scalar(const BigInt& a) {
    TPoly f(a);
    for (auto& c : c_) c = c * f;
}

void TruncatedSeries::mul_binomial(int sign, std::int64_t t_pow, std::int64_t q_pow) {
    if (q_pow < 0) throw std::invalid_argument("mul_binomial: negative q-exponent");
    if (q_pow == 0) {
        for (auto& c : c_) {
            TPoly copy = c;
            c.add_shifted(copy, sign, t_pow, t_order_);
        }
        return;
    }
    for (std::int64_t n = order_; n >= q_pow; --n) {
        c_[static_cast<std::size_t>(n)].add_shifted(c_[static_cast<std::size_t>(n - q_pow)],
                                                    sign, t_pow, t_order_);
    }
}

void TruncatedSeries::mul_inv_binomial(int sign, std::int64_t t_pow, std::int64_t q_pow) {
    if (q_pow >= 1) {
        // (1 + s t^c q^m) * new = old  =>  new[n] = old[n] - s t^c new[n-m]
        for (std::int64_t n = q_pow; n <= order_; ++n) {
            c_[static_cast<std::size_t>(n)].add_shifted(c_[static_cast<std::size_t>(n - q_pow)],
                                                        -sign, t_pow, t_order_);
        }
        return;
    }
    if (t_pow < 1) {
        throw std::invalid_argument("mul_inv_binomial: 1/(1 +- 1) has no series expansion");
    }
    // geometric expansion in t alone: 1/(1 + s t^c) = sum_j (-s)^j t^{jc}
    TPoly geom;
    for (std::int64_t j = 0; j * t_pow <= t_order_; ++j) {
        geom.add_shifted(TPoly::term(j % 2 == 0 ? BigInt(1) : BigInt(-sign), j * t_pow),
                         +1, 0, t_order_);
    }
    for (auto& c : c_) {
        TPoly prod = c * geom;
        prod.truncate(t_order_);
        c = std::move(prod);
    }
}

void TruncatedSeries::mul_one_plus_powers(const std::vector<std::int64_t>& exponents) {
    for (std::int64_t n = order_; n >= 1; --n) {
        for (std::int64_t e : exponents) {
            if (e >= 1 && e <= n) {
                c_[static_cast<std::size_t>(n)].add_shifted(
                    c_[static_cast<std::size_t>(n - e)], +1, 0, t_order_);
            }
        }
    }
}

TruncatedSeries TruncatedSeries::shifted(std::int64_t q_exp) const {
    if (q_exp < 0) throw std::invalid_argument("shifted: negative q-exponent");
    TruncatedSeries out(order_, t_order_);
    for (std::int64_t n = order_; n >= q_exp; --n) {
        out.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(n - q_exp)];
    }
    return out;
}

TruncatedSeries TruncatedSeries::dissected(std::int64_t d, std::int64_t r) const {
    if (d < 1 || r < 0 || r >= d) throw std::invalid_argument("dissected: need 0 <= r < d");
    if (r > order_) throw std::invalid_argument("dissected: residue exceeds truncation order");
    TruncatedSeries out((order_ - r) / d, t_order_);
    for (std::int64_t n = 0; n <= out.order_; ++n) {
        out.c_[static_cast<std::size_t>(n)] = c_[static_cast<std::size_t>(d * n + r)];
    }
    return out;
}

std::string TruncatedSeries::str(std::int64_t display_order) const {
    if (display_order < 0 || display_order > order_) display_order = order_;
    std::string out;
    for (std::int64_t n = 0; n <= display_order; ++n) {
        const TPoly& c = c_[static_cast<std::size_t>(n)];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool negative = cs.size() > 1 && cs[0] == '-' && c.degree() <= 0;
        if (out.empty()) {
            if (negative) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            out += negative ? " - " : " + ";
            if (negative) cs = cs.substr(1);
        }
        bool wrap = c.degree() > 0;
        if (n == 0) {
            out += wrap ? "(" + cs + ")" : cs;
        } else {
            std::string qs = n == 1 ? "q" : "q^" + std::to_string(n);
            if (wrap) out += "(" + cs + ")*" + qs;
            else if (cs == "1") out += qs;
            else out += cs + "*" + qs;
        }
    }
    return out.empty() ? "0" : out;
}

std::string TruncatedSeries::to_json() const {
    nlohmann::json j;
    j["order"] = order_;
    auto& arr = j["coeffs"] = nlohmann::json::array();
    for (const auto& c : c_) arr.push_back(c.str());
    return j.dump();
}

std::optional<std::int64_t> first_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::int64_t top = std::min(a.order(), b.order());
    for (std::int64_t n = 0; n <= top; ++n) {
        if (!(a.coeff(n) == b.coeff(n))) return n;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// products and classical series
// ---------------------------------------------------------------------------

ProductSpec& ProductSpec::times(int sign, std::int64_t offset, std::int64_t step, int exponent,
                                std::int64_t t_pow) {
    factors.push_back({sign, t_pow, offset, step, exponent});
    return *this;
}

TruncatedSeries pochhammer(const ProductSpec& spec, std::int64_t N) {
    for (const auto& f : spec.factors) {
        if ((f.sign != 1 && f.sign != -1) || (f.exponent != 1 && f.exponent != -1) ||
            f.step < 1 || f.offset < 0 || f.t_pow < 0) {
            throw std::invalid_argument("pochhammer: malformed factor");
        }
        if (f.exponent == -1 && f.offset == 0 && f.t_pow == 0) {
            throw std::invalid_argument(
                "pochhammer: inverse factor with neither q- nor t-power is not expandable");
        }
    }
    TruncatedSeries s = TruncatedSeries::one(N);
    for (const auto& f : spec.factors) {
        for (std::int64_t e = f.offset; e <= N; e += f.step) {
            if (f.exponent == 1) s.mul_binomial(f.sign, f.t_pow, e);
            else s.mul_inv_binomial(f.sign, f.t_pow, e);
        }
    }
    return s;
}

TruncatedSeries theta_pentagonal(std::int64_t N) {
    TruncatedSeries s(N);
    s.set_coeff(0, TPoly(1));
    for (std::int64_t n = 1;; ++n) {
        std::int64_t e1 = n * (3 * n - 1) / 2;
        std::int64_t e2 = n * (3 * n + 1) / 2;
        if (e1 > N) break;
        BigInt sign = n % 2 == 0 ? 1 : -1;
        s.add_coeff(e1, TPoly(sign));
        if (e2 <= N) s.add_coeff(e2, TPoly(sign));
    }
    return s;
}

TruncatedSeries theta_gauss(std::int64_t N) {
    TruncatedSeries s(N);
    s.set_coeff(0, TPoly(1));
    for (std::int64_t n = 1; n * n <= N; ++n) {
        s.add_coeff(n * n, TPoly(n % 2 == 0 ? 2 : -2));
    }
    return s;
}

TruncatedSeries jacobi_triple(std::int64_t m, int sign, std::int64_t N) {
    if (m < 0) {
        throw std::invalid_argument("jacobi_triple: m < 0 produces negative q-exponents");
    }
    if (sign != 1 && sign != -1) throw std::invalid_argument("jacobi_triple: sign must be ±1");
    TruncatedSeries s(N);
    auto sign_pow = [&](std::int64_t e) -> BigInt {
        return (sign == 1 || ((e % 2) + 2) % 2 == 0) ? 1 : -1;
    };
    for (std::int64_t j = 0;; ++j) { // q^{j(j+1)/2}, bilateral: j and -(j+1) coincide
        std::int64_t e = j * (j + 1) / 2;
        if (e > N) break;
        s.add_coeff(e, TPoly(sign_pow(j - m)));
        s.add_coeff(e, TPoly(sign_pow(-(j + 1) - m)));
    }
    return s;
}

TruncatedSeries jacobi_triple_product(std::int64_t m, int sign, std::int64_t N) {
    if (m < 0) throw std::invalid_argument("jacobi_triple_product: m must be >= 0");
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("jacobi_triple_product: sign must be ±1");
    }
    // q^{m(m+1)/2} prod (1-q^n)(1 + s q^{n+m})(1 + s q^{n-1-m}), with the
    // m negative-exponent factors flipped via (1 + s q^{-e}) = s q^{-e}(1 + s q^e)
    TruncatedSeries s = TruncatedSeries::one(N);
    s.mul_scalar(sign == -1 && m % 2 == 1 ? BigInt(-1) : BigInt(1)); // s^m
    s.mul_scalar(1 + sign);                                          // e = 0 factor
    ProductSpec rest;
    for (std::int64_t e = 1; e <= m; ++e) rest.times(sign, e, N + 1); // flipped factors
    rest.times(-1, 1, 1);        // (q;q)
    rest.times(sign, m + 1, 1);  // (1 + s q^{n+m}), n >= 1
    rest.times(sign, 1, 1);      // (1 + s q^e), e >= 1
    return s * pochhammer(rest, N);
}

VerificationReport euler_q1_check(std::int64_t max_total_order) {
    VerificationReport report;
    report.identity = "euler-product";
    report.params = {{"order", max_total_order}};
    report.range_lo = 0;
    report.range_hi = max_total_order;
    auto start = std::chrono::steady_clock::now();

    const std::int64_t M = max_total_order;
    TruncatedSeries lhs(M, M);
    for (std::int64_t n = 0; n <= M; ++n) {
        std::int64_t e = n * (n - 1) / 2;
        if (e > M) break;
        TruncatedSeries term = TruncatedSeries::monomial(M, e, TPoly::term(1, n), M);
        for (std::int64_t i = 1; i <= n; ++i) term.mul_inv_binomial(-1, 0, i);
        lhs += term;
    }
    TruncatedSeries rhs = TruncatedSeries::one(M, M);
    for (std::int64_t e = 0; e <= M; ++e) rhs.mul_binomial(+1, 1, e);

    for (std::int64_t n = 0; n <= M; ++n) {
        if (!(lhs.coeff(n) == rhs.coeff(n))) {
            report.fail(n, lhs.coeff(n).str(), rhs.coeff(n).str(), "bivariate coefficient");
        }
    }
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// family generating functions
// ---------------------------------------------------------------------------

namespace {

TruncatedSeries gf_self_conjugate(std::int64_t N) {
    // Durfee square: sum_s q^{s^2} / (q^2; q^2)_s
    TruncatedSeries acc = TruncatedSeries::one(N);
    for (std::int64_t s = 1; s * s <= N; ++s) {
        TruncatedSeries term = TruncatedSeries::monomial(N, s * s, TPoly(1));
        for (std::int64_t i = 1; i <= s; ++i) term.mul_inv_binomial(-1, 0, 2 * i);
        acc += term;
    }
    return acc;
}

TruncatedSeries gf_separable(const ConstraintSpec& spec, std::int64_t N) {
    TruncatedSeries s = TruncatedSeries::one(N);
    for (std::int64_t size = 1; size <= N; ++size) {
        auto rule = spec.multiplicity_rule(size);
        if (rule.forbidden()) continue;
        if (rule.step > 0) {
            std::vector<std::int64_t> exps;
            for (std::int64_t j = 1; j <= rule.count && j * rule.step * size <= N; ++j) {
                exps.push_back(j * rule.step * size);
            }
            s.mul_one_plus_powers(exps);
        } else if (rule.cap == -1) {
            s.mul_inv_binomial(-1, 0, size);
        } else {
            std::int64_t drop = (rule.cap + 1) * size;
            if (drop <= N) s.mul_binomial(-1, 0, drop);
            s.mul_inv_binomial(-1, 0, size);
        }
    }
    return s;
}

} // namespace

TruncatedSeries gf(const ConstraintSpec& spec, std::int64_t N) {
    switch (spec.shape()) {
        case ConstraintSpec::Shape::SelfConjugate:
            return gf_self_conjugate(N);
        case ConstraintSpec::Shape::Symmetric:
            return gf_symmetric_sum(*spec.profile(), N);
        case ConstraintSpec::Shape::None:
            break;
    }
    return gf_separable(spec, N);
}

TruncatedSeries gf_symmetric_sum(const SymmetricProfile& profile, std::int64_t N) {
    TruncatedSeries acc(N);
    for (std::int64_t n = 0;; ++n) {
        std::int64_t e = profile.mu * n * (n - 1) / 2 + n * (profile.gamma + 1);
        if (e > N) break;
        TruncatedSeries term = TruncatedSeries::monomial(N, e, TPoly(1));
        for (std::int64_t i = 1; i <= n; ++i) term.mul_inv_binomial(-1, 0, profile.mu * i);
        acc += term;
    }
    return acc;
}

TruncatedSeries gf_even_order_sum(const SymmetricProfile& profile, std::int64_t N) {
    TruncatedSeries acc(N);
    for (std::int64_t j = 0;; ++j) {
        std::int64_t e = profile.mu * j * (2 * j - 1) + 2 * j * (profile.gamma + 1);
        if (e > N) break;
        TruncatedSeries term = TruncatedSeries::monomial(N, e, TPoly(1));
        for (std::int64_t i = 1; i <= 2 * j; ++i) term.mul_inv_binomial(-1, 0, profile.mu * i);
        acc += term;
    }
    return acc;
}

TruncatedSeries gf_odd_order_sum(const SymmetricProfile& profile, std::int64_t N) {
    TruncatedSeries acc(N);
    for (std::int64_t j = 0;; ++j) {
        std::int64_t e = profile.mu * (2 * j + 1) * j + (2 * j + 1) * (profile.gamma + 1);
        if (e > N) break;
        TruncatedSeries term = TruncatedSeries::monomial(N, e, TPoly(1));
        for (std::int64_t i = 1; i <= 2 * j + 1; ++i) {
            term.mul_inv_binomial(-1, 0, profile.mu * i);
        }
        acc += term;
    }
    return acc;
}

TruncatedSeries gf_slater1_sum(std::int64_t N) {
    TruncatedSeries acc(N);
    for (std::int64_t n = 0; 2 * n * n <= N; ++n) {
        TruncatedSeries term = TruncatedSeries::monomial(N, 2 * n * n, TPoly(1));
        for (std::int64_t i = 1; i <= 2 * n; ++i) term.mul_inv_binomial(-1, 0, i);
        acc += term;
    }
    return acc;
}

TruncatedSeries gf_slater1_product(std::int64_t N) {
    ProductSpec spec;
    spec.times(-1, 7, 8).times(-1, 1, 8).times(-1, 6, 16).times(-1, 10, 16).times(-1, 8, 8);
    spec.times(-1, 1, 1, -1);
    return pochhammer(spec, N);
}

TruncatedSeries gf_slater2_sum(std::int64_t N) {
    TruncatedSeries acc(N);
    for (std::int64_t n = 0; 2 * n * (n + 1) <= N; ++n) {
        TruncatedSeries term = TruncatedSeries::monomial(N, 2 * n * (n + 1), TPoly(1));
        for (std::int64_t i = 1; i <= 2 * n + 1; ++i) term.mul_inv_binomial(-1, 0, i);
        acc += term;
    }
    return acc;
}

TruncatedSeries gf_slater2_product(std::int64_t N) {
    ProductSpec spec;
    spec.times(-1, 5, 8).times(-1, 3, 8).times(-1, 2, 16).times(-1, 14, 16).times(-1, 8, 8);
    spec.times(-1, 1, 1, -1);
    return pochhammer(spec, N);
}

TruncatedSeries gf_three_dissection_component_raw(int r, std::int64_t N) {
    ProductSpec spec;
    switch (r) {
        case 0:
            spec.times(-1, 27, 27).times(+1, 15, 27).times(+1, 12, 27).times(-1, 3, 3, -1);
            return pochhammer(spec, N);
        case 1: {
            spec.times(-1, 27, 27).times(+1, 21, 27).times(+1, 33, 27).times(-1, 3, 3, -1);
            TruncatedSeries s = pochhammer(spec, N);
            s.mul_binomial(+1, 0, 6); // the printed (1 + q^6) prefactor
            return s.shifted(1);
        }
        case 2:
            spec.times(-1, 27, 27).times(+1, 3, 27).times(+1, 24, 27).times(-1, 3, 3, -1);
            return pochhammer(spec, N).shifted(2);
        default:
            throw std::invalid_argument("three-dissection component index must be 0, 1 or 2");
    }
}

TruncatedSeries gf_three_dissection_component(int r, std::int64_t N) {
    ProductSpec spec;
    switch (r) {
        case 0:
            spec.times(-1, 9, 9).times(+1, 5, 9).times(+1, 4, 9).times(-1, 1, 1, -1);
            return pochhammer(spec, N);
        case 1: {
            spec.times(-1, 9, 9).times(+1, 7, 9).times(+1, 11, 9).times(-1, 1, 1, -1);
            TruncatedSeries s = pochhammer(spec, N);
            s.mul_binomial(+1, 0, 2); // the (1 + q^6) prefactor, reindexed
            return s;
        }
        case 2:
            spec.times(-1, 9, 9).times(+1, 1, 9).times(+1, 8, 9).times(-1, 1, 1, -1);
            return pochhammer(spec, N);
        default:
            throw std::invalid_argument("three-dissection component index must be 0, 1 or 2");
    }
}

} // namespace partita
