#include "partita/glaisher.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "partita/constraint.hpp"
#include "partita/enumerate.hpp"

namespace partita {

void BijectionTrace::record(std::string rule, Partition before, Partition after) {
    steps.push_back({std::move(rule), std::move(before), std::move(after)});
}

void BijectionTrace::write_jsonl(std::ostream& os) const {
    for (const auto& step : steps) {
        nlohmann::json j;
        j["rule"] = step.rule;
        j["before"] = step.before.str(true);
        j["after"] = step.after.str(true);
        os << j.dump() << '\n';
    }
}

namespace {

// size -> multiplicity, iterated largest size first
using MultMap = std::map<std::int64_t, std::int64_t, std::greater<>>;

MultMap to_map(const Partition& p) {
    MultMap m;
    for (const auto& e : p.multiplicities()) m[e.size] = e.multiplicity;
    return m;
}

Partition to_partition(const MultMap& m) {
    std::vector<std::int64_t> parts;
    for (const auto& [size, mult] : m) {
        parts.insert(parts.end(), static_cast<std::size_t>(mult), size);
    }
    return Partition::from_sorted(std::move(parts));
}

void add(MultMap& m, std::int64_t size, std::int64_t count) {
    auto it = m.find(size);
    if (it == m.end()) {
        m.emplace(size, count);
    } else if ((it->second += count) == 0) {
        m.erase(it);
    }
}

void merge_step(MultMap& m, std::int64_t size, std::int64_t k) {
    add(m, size, -k);
    add(m, size * k, 1);
}

void split_step(MultMap& m, std::int64_t size, std::int64_t k) {
    add(m, size, -1);
    add(m, size / k, k);
}

void check_weight(const Partition& in, const Partition& out, const char* what) {
    if (in.weight() != out.weight()) {
        throw std::logic_error(std::string(what) + " broke weight preservation: " +
                               in.str() + " -> " + out.str());
    }
}

struct Tracer {
    BijectionTrace* trace;
    const MultMap& state;
    Partition last;

    Tracer(BijectionTrace* t, const MultMap& s) : trace(t), state(s) {
        if (trace) last = to_partition(state);
    }
    void step(const char* rule) {
        if (!trace) return;
        Partition now = to_partition(state);
        trace->record(rule, std::move(last), now);
        last = std::move(now);
    }
};

} // namespace

Partition glaisher_merge(const Partition& p, std::int64_t k, BijectionTrace* trace) {
    if (k < 2) throw std::invalid_argument("glaisher_merge needs k >= 2");
    MultMap m = to_map(p);
    Tracer tracer(trace, m);
    for (;;) {
        auto it = std::find_if(m.begin(), m.end(),
                               [&](const auto& e) { return e.second >= k; });
        if (it == m.end()) break;
        merge_step(m, it->first, k);
        tracer.step("merge");
    }
    Partition out = to_partition(m);
    check_weight(p, out, "glaisher_merge");
    return out;
}

Partition glaisher_split(const Partition& p, std::int64_t k, BijectionTrace* trace) {
    if (k < 2) throw std::invalid_argument("glaisher_split needs k >= 2");
    MultMap m = to_map(p);
    Tracer tracer(trace, m);
    for (;;) {
        auto it = std::find_if(m.begin(), m.end(),
                               [&](const auto& e) { return e.first % k == 0; });
        if (it == m.end()) break;
        split_step(m, it->first, k);
        tracer.step("split");
    }
    Partition out = to_partition(m);
    check_weight(p, out, "glaisher_split");
    return out;
}

namespace {

// Deterministic closure of {merge `merge_k` equal parts, split parts divisible
// by `split_k`}: largest size first, merge before split at the same size.
Partition rewrite_closure(const Partition& p, std::int64_t merge_k, std::int64_t split_k,
                          BijectionTrace* trace, const char* what) {
    MultMap m = to_map(p);
    Tracer tracer(trace, m);
    const std::int64_t budget = 64 * std::max<std::int64_t>(p.weight(), 1);
    std::int64_t steps = 0;
    for (;;) {
        auto it = std::find_if(m.begin(), m.end(), [&](const auto& e) {
            return e.second >= merge_k || e.first % split_k == 0;
        });
        if (it == m.end()) break;
        if (it->second >= merge_k) {
            merge_step(m, it->first, merge_k);
            tracer.step("merge");
        } else {
            split_step(m, it->first, split_k);
            tracer.step("split");
        }
        if (++steps > budget) {
            throw std::logic_error(std::string(what) + ": rewriting exceeded the " +
                                   std::to_string(budget) + "-step budget on " + p.str());
        }
    }
    Partition out = to_partition(m);
    check_weight(p, out, what);
    return out;
}

std::int64_t rank_of(const std::vector<Partition>& list, const Partition& p) {
    auto it = std::lower_bound(list.begin(), list.end(), p, std::greater<>());
    if (it == list.end() || *it != p) {
        throw std::logic_error("canonical-rank lookup failed for " + p.str());
    }
    return it - list.begin();
}

Partition rank_map(const Partition& p, const ConstraintSpec& from, const ConstraintSpec& to,
                   BijectionTrace* trace, const char* what) {
    auto domain = enumerate_all(p.weight(), from);
    auto codomain = enumerate_all(p.weight(), to);
    if (domain.size() != codomain.size()) {
        throw std::logic_error(std::string(what) + ": families " + from.label() + " and " +
                               to.label() + " are not equinumerous at n = " +
                               std::to_string(p.weight()));
    }
    Partition out = codomain[static_cast<std::size_t>(rank_of(domain, p))];
    if (trace) trace->record("canonical-rank", p, out);
    check_weight(p, out, what);
    return out;
}

} // namespace

Partition phi(const Partition& lambda, std::int64_t p, std::int64_t k, BijectionTrace* trace) {
    if (p < 2 || k < 2) throw std::invalid_argument("phi needs p >= 2 and k >= 2");
    auto b_spec = ConstraintSpec::b_family(p, k);
    if (!b_spec.matches(lambda)) {
        throw std::invalid_argument("phi: " + lambda.str() + " is not in " + b_spec.label());
    }
    if (std::gcd(p, k) == 1) {
        return rewrite_closure(lambda, p, k, trace, "phi");
    }
    return rank_map(lambda, b_spec, ConstraintSpec::c_family(k, p), trace, "phi");
}

Partition phi_inverse(const Partition& mu, std::int64_t p, std::int64_t k,
                      BijectionTrace* trace) {
    if (p < 2 || k < 2) throw std::invalid_argument("phi_inverse needs p >= 2 and k >= 2");
    auto c_spec = ConstraintSpec::c_family(k, p);
    if (!c_spec.matches(mu)) {
        throw std::invalid_argument("phi_inverse: " + mu.str() + " is not in " + c_spec.label());
    }
    if (std::gcd(p, k) == 1) {
        return rewrite_closure(mu, k, p, trace, "phi_inverse");
    }
    return rank_map(mu, c_spec, ConstraintSpec::b_family(p, k), trace, "phi_inverse");
}

namespace {

// Lifts the trace of a phi run on a subpartition to the full partition by
// unioning the untouched parts into every snapshot.
void lift_trace(BijectionTrace* out, const BijectionTrace& inner,
                const std::vector<std::int64_t>& fixed) {
    if (!out) return;
    for (const auto& step : inner.steps) {
        auto join = [&](const Partition& q) {
            std::vector<std::int64_t> parts = q.parts();
            parts.insert(parts.end(), fixed.begin(), fixed.end());
            return Partition::canonicalize(std::move(parts));
        };
        out->record(step.rule, join(step.before), join(step.after));
    }
}

} // namespace

Partition f_to_r(const Partition& lambda, std::int64_t p, std::int64_t t,
                 BijectionTrace* trace) {
    auto f_spec = ConstraintSpec::f_family(p, t);
    if (!f_spec.matches(lambda)) {
        throw std::invalid_argument("f_to_r: " + lambda.str() + " is not in " + f_spec.label());
    }
    std::vector<std::int64_t> residual;   // parts not divisible by p
    std::vector<std::int64_t> dilated;    // t*a with multiplicity j, for a^{jt} in lambda
    for (const auto& [size, mult] : lambda.multiplicities()) {
        if (size % p == 0) {
            dilated.insert(dilated.end(), static_cast<std::size_t>(mult / t), t * size);
        } else {
            residual.insert(residual.end(), static_cast<std::size_t>(mult), size);
        }
    }
    Partition lambda_r = Partition::from_sorted(residual);
    BijectionTrace inner;
    Partition mapped = phi(lambda_r, p, p * t, trace ? &inner : nullptr);
    lift_trace(trace, inner, dilated);

    std::vector<std::int64_t> parts = mapped.parts();
    parts.insert(parts.end(), dilated.begin(), dilated.end());
    Partition out = Partition::canonicalize(std::move(parts));
    if (trace) {
        // first rewrite every a^{jt} block into (t a)^j, then the lifted phi steps
        std::vector<std::int64_t> mid = lambda_r.parts();
        mid.insert(mid.end(), dilated.begin(), dilated.end());
        BijectionTrace full;
        full.record("dilate-multiples", lambda, Partition::canonicalize(std::move(mid)));
        for (auto& s : trace->steps) full.steps.push_back(std::move(s));
        trace->steps = std::move(full.steps);
    }
    check_weight(lambda, out, "f_to_r");
    return out;
}

Partition r_to_f(const Partition& mu, std::int64_t p, std::int64_t t, BijectionTrace* trace) {
    auto r_spec = ConstraintSpec::r_family(p);
    if (!r_spec.matches(mu)) {
        throw std::invalid_argument("r_to_f: " + mu.str() + " is not in " + r_spec.label());
    }
    std::vector<std::int64_t> residual;   // parts not divisible by p*t
    std::vector<std::int64_t> contracted; // a/t with multiplicity m*t, for a^m with p*t | a
    for (const auto& [size, mult] : mu.multiplicities()) {
        if (size % (p * t) == 0) {
            contracted.insert(contracted.end(), static_cast<std::size_t>(mult * t), size / t);
        } else {
            residual.insert(residual.end(), static_cast<std::size_t>(mult), size);
        }
    }
    Partition mu2 = Partition::from_sorted(residual);
    BijectionTrace inner;
    Partition mapped = phi_inverse(mu2, p, p * t, trace ? &inner : nullptr);
    lift_trace(trace, inner, contracted);

    std::vector<std::int64_t> parts = mapped.parts();
    parts.insert(parts.end(), contracted.begin(), contracted.end());
    Partition out = Partition::canonicalize(std::move(parts));
    if (trace) {
        std::vector<std::int64_t> mid = mu2.parts();
        mid.insert(mid.end(), contracted.begin(), contracted.end());
        BijectionTrace full;
        full.record("contract-multiples", mu, Partition::canonicalize(std::move(mid)));
        for (auto& s : trace->steps) full.steps.push_back(std::move(s));
        trace->steps = std::move(full.steps);
    }
    check_weight(mu, out, "r_to_f");
    return out;
}

} // namespace partita
