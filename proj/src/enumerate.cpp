#include "partita/enumerate.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace partita {

namespace {

struct Enumerator {
    const ConstraintSpec& spec;
    const std::function<bool(const Partition&)>& visit;
    std::vector<std::int64_t> current;
    bool stopped = false;

    // Chooses, for each size from high to low, an allowed multiplicity from
    // high to low; this emits part lists in decreasing lexicographic order.
    void rec(std::int64_t remaining, std::int64_t size) {
        if (stopped) return;
        if (remaining == 0) {
            Partition p = Partition::from_sorted(current);
            if (spec.separable() || spec.matches(p)) {
                if (!visit(p)) stopped = true;
            }
            return;
        }
        if (size <= 0) return;
        auto rule = spec.multiplicity_rule(size);
        std::int64_t top = rule.max_mult(size, remaining);
        std::int64_t stride = rule.step == 0 ? 1 : rule.step;
        for (std::int64_t m = top; m >= 1 && !stopped; m -= stride) {
            current.insert(current.end(), static_cast<std::size_t>(m), size);
            rec(remaining - m * size, size - 1);
            current.resize(current.size() - static_cast<std::size_t>(m));
        }
        rec(remaining, size - 1);
    }
};

} // namespace

void enumerate(std::int64_t n, const ConstraintSpec& spec,
               const std::function<bool(const Partition&)>& visit) {
    if (n < 0) throw std::invalid_argument("enumerate: n must be nonnegative");
    Enumerator e{spec, visit, {}, false};
    e.rec(n, n);
}

std::vector<Partition> enumerate_all(std::int64_t n, const ConstraintSpec& spec) {
    std::vector<Partition> out;
    enumerate(n, spec, [&](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

BigInt count_by_enumeration(std::int64_t n, const ConstraintSpec& spec) {
    BigInt c = 0;
    enumerate(n, spec, [&](const Partition&) {
        ++c;
        return true;
    });
    return c;
}

namespace {

// dp[w] over sizes 1..n_max with the constraint's per-size allowed multiplicities.
std::vector<BigInt> separable_table(std::int64_t n_max, const ConstraintSpec& spec) {
    std::vector<BigInt> dp(static_cast<std::size_t>(n_max) + 1);
    dp[0] = 1;
    for (std::int64_t s = 1; s <= n_max; ++s) {
        auto rule = spec.multiplicity_rule(s);
        if (rule.forbidden()) continue;
        if (rule.step > 0) {
            // explicit multiples {step, 2*step, ..., count*step}; reads stay
            // below the write index, so descending update is in-place safe
            for (std::int64_t w = n_max; w >= s * rule.step; --w) {
                for (std::int64_t j = 1; j <= rule.count && j * rule.step * s <= w; ++j) {
                    dp[w] += dp[w - j * rule.step * s];
                }
            }
        } else if (rule.cap == -1) {
            for (std::int64_t w = s; w <= n_max; ++w) dp[w] += dp[w - s]; // 1/(1-q^s)
        } else if (rule.cap > 0) {
            // multiply by (1 - q^{(cap+1)s}) then by 1/(1-q^s)
            std::int64_t drop = (rule.cap + 1) * s;
            for (std::int64_t w = n_max; w >= drop; --w) dp[w] -= dp[w - drop];
            for (std::int64_t w = s; w <= n_max; ++w) dp[w] += dp[w - s];
        }
    }
    return dp;
}

// Self-conjugate partitions via the Durfee square: n = s^2 + 2m with m split
// into parts of size at most s.
std::vector<BigInt> self_conjugate_table(std::int64_t n_max) {
    std::vector<BigInt> out(static_cast<std::size_t>(n_max) + 1);
    out[0] = 1;
    std::vector<BigInt> dp(static_cast<std::size_t>(n_max) + 1);
    dp[0] = 1;
    for (std::int64_t s = 1; s * s <= n_max; ++s) {
        for (std::int64_t w = s; w <= n_max; ++w) dp[w] += dp[w - s];
        for (std::int64_t n = s * s; n <= n_max; n += 2) {
            out[n] += dp[(n - s * s) / 2];
        }
    }
    return out;
}

} // namespace

std::vector<BigInt> count_table_dp(std::int64_t n_max, const ConstraintSpec& spec) {
    if (n_max < 0) throw std::invalid_argument("count_table_dp: n_max must be nonnegative");
    switch (spec.shape()) {
        case ConstraintSpec::Shape::None:
            return separable_table(n_max, spec);
        case ConstraintSpec::Shape::SelfConjugate:
            return self_conjugate_table(n_max);
        case ConstraintSpec::Shape::Symmetric:
            throw std::invalid_argument(
                "count_table_dp: no DP for symmetric-profile families; use count()");
    }
    return {};
}

BigInt count_by_dp(std::int64_t n, const ConstraintSpec& spec) {
    return count_table_dp(n, spec).back();
}

BigInt count(std::int64_t n, const ConstraintSpec& spec) {
    if (spec.shape() == ConstraintSpec::Shape::Symmetric) {
        return count_by_enumeration(n, spec);
    }
    return count_by_dp(n, spec);
}

std::vector<BigInt> distinct_count_table(std::int64_t n_max) {
    return count_table_dp(n_max, ConstraintSpec::distinct_parts());
}

std::pair<std::vector<BigInt>, std::vector<BigInt>>
fe_fo_tables(std::int64_t n_max, std::int64_t t) {
    if (n_max < 0 || t < 1) throw std::invalid_argument("fe_fo_tables: need n_max >= 0, t >= 1");
    auto size = static_cast<std::size_t>(n_max) + 1;
    std::vector<BigInt> even(size), odd(size);
    even[0] = 1;
    for (std::int64_t s = 1; s <= n_max; ++s) {
        if (s % 2 == 0) {
            // an even part size appears exactly t times and flips the parity
            for (std::int64_t w = n_max; w >= t * s; --w) {
                even[w] += odd[w - t * s];
                odd[w] += even[w - t * s];
            }
        } else {
            // odd part sizes appear up to 2t-1 times, parity untouched
            for (std::int64_t w = n_max; w >= s; --w) {
                for (std::int64_t m = 1; m <= 2 * t - 1 && m * s <= w; ++m) {
                    even[w] += even[w - m * s];
                    odd[w] += odd[w - m * s];
                }
            }
        }
    }
    return {std::move(even), std::move(odd)};
}

BigInt count_fe(std::int64_t n, std::int64_t t) { return fe_fo_tables(n, t).first.back(); }
BigInt count_fo(std::int64_t n, std::int64_t t) { return fe_fo_tables(n, t).second.back(); }

BigInt corollary_fo(std::int64_t n, std::int64_t t, const std::vector<BigInt>& d_table) {
    if (n < 0 || t < 1) throw std::invalid_argument("corollary_fo: need n >= 0, t >= 1");
    BigInt sum = 0;
    for (std::int64_t j = 1; 2 * t * j * j <= n; ++j) {
        const BigInt& d = d_table.at(static_cast<std::size_t>(n - 2 * t * j * j));
        if (j % 2 == 1) sum += d;
        else sum -= d;
    }
    return sum;
}

BigInt corollary_fo(std::int64_t n, std::int64_t t) {
    return corollary_fo(n, t, distinct_count_table(n < 2 * t ? 0 : n));
}

CountTable CountTable::build(const ConstraintSpec& spec, std::int64_t n_max) {
    CountTable table;
    table.family = spec.label();
    table.params = spec.params();
    if (spec.shape() == ConstraintSpec::Shape::Symmetric) {
        table.counts.reserve(static_cast<std::size_t>(n_max) + 1);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            table.counts.push_back(count_by_enumeration(n, spec));
        }
    } else {
        table.counts = count_table_dp(n_max, spec);
    }
    return table;
}

void CountTable::write_csv(std::ostream& os) const {
    os << "n,count\n";
    for (std::size_t n = 0; n < counts.size(); ++n) {
        os << n << ',' << counts[n] << '\n';
    }
}

std::string CountTable::to_json() const {
    nlohmann::json j;
    j["family"] = family;
    j["params"] = params;
    auto& arr = j["counts"] = nlohmann::json::array();
    for (const auto& c : counts) arr.push_back(c.str());
    return j.dump();
}

} // namespace partita
