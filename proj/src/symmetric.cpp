#include "partita/symmetric.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "partita/constraint.hpp"
#include "partita/enumerate.hpp"

namespace partita {

SymmetricProfile::SymmetricProfile(std::int64_t mu_, std::int64_t gamma_)
    : mu(mu_), gamma(gamma_) {
    if (mu < 2) throw std::invalid_argument("symmetric profile requires mu >= 2");
    if (gamma < 0) throw std::invalid_argument("symmetric profile requires gamma >= 0");
}

HeadTail head_tail(const Partition& p) {
    auto s = static_cast<std::size_t>(p.order());
    HeadTail ht;
    ht.head.assign(p.parts().begin(), p.parts().begin() + s);
    std::vector<std::int64_t> rest(p.parts().begin() + s, p.parts().end());
    ht.tail = Partition::from_sorted(std::move(rest)).multiplicities();
    return ht;
}

MultiplicityView prescribed_tail(const std::vector<std::int64_t>& head,
                                 const SymmetricProfile& profile) {
    const auto s = static_cast<std::int64_t>(head.size());
    if (s < 1) throw std::invalid_argument("prescribed_tail: head must be nonempty");
    for (std::int64_t i = 1; i < s; ++i) {
        if (head[i - 1] < head[i]) {
            throw std::invalid_argument("prescribed_tail: head must be weakly decreasing");
        }
    }
    if (head.back() < s) {
        throw std::invalid_argument("prescribed_tail: head needs lambda_s >= s, got lambda_" +
                                    std::to_string(s) + " = " + std::to_string(head.back()));
    }
    MultiplicityView tail;
    if (std::int64_t m = (profile.mu - 1) * (head.back() - s) + profile.gamma; m > 0) {
        tail.push_back({s, m});
    }
    for (std::int64_t size = s - 1; size >= 1; --size) {
        // size j corresponds to head entries lambda_j, lambda_{j+1} (1-based)
        std::int64_t m = (profile.mu - 1) * (head[size - 1] - head[size] + 1) - 1;
        if (m > 0) tail.push_back({size, m});
    }
    return tail;
}

bool is_symmetric(const Partition& p, const SymmetricProfile& profile) {
    if (p.empty()) return true;
    HeadTail ht = head_tail(p);
    return ht.tail == prescribed_tail(ht.head, profile);
}

namespace {

void check_weight(const Partition& in, const Partition& out, const char* what) {
    if (in.weight() != out.weight()) {
        throw std::logic_error(std::string(what) + " broke weight preservation: " +
                               in.str() + " -> " + out.str());
    }
}

} // namespace

Partition sylvester_general(const Partition& p, const SymmetricProfile& profile) {
    if (!is_symmetric(p, profile)) {
        throw std::invalid_argument("sylvester_general: (" + p.str() + ") is not (" +
                                    std::to_string(profile.mu) + "," +
                                    std::to_string(profile.gamma) + ")-symmetric");
    }
    const std::int64_t s = p.order();
    std::vector<std::int64_t> beta;
    beta.reserve(static_cast<std::size_t>(s));
    for (std::int64_t i = 1; i <= s; ++i) {
        beta.push_back(profile.mu * (p.part(static_cast<std::size_t>(i - 1)) - i) + 1 +
                       profile.gamma);
    }
    Partition out = Partition::from_sorted(std::move(beta));
    check_weight(p, out, "sylvester_general");
    return out;
}

Partition sylvester_general_inverse(const Partition& beta,
                                    const SymmetricProfile& profile) {
    const auto& bp = beta.parts();
    for (std::size_t i = 0; i < bp.size(); ++i) {
        if (i + 1 < bp.size() && bp[i] == bp[i + 1]) {
            throw std::invalid_argument("sylvester_general_inverse: parts must be distinct");
        }
        if ((bp[i] - 1 - profile.gamma) % profile.mu != 0 || bp[i] < 1 + profile.gamma) {
            throw std::invalid_argument(
                "sylvester_general_inverse: part " + std::to_string(bp[i]) +
                " is not congruent to 1+gamma (mod mu) with part >= gamma+1");
        }
    }
    if (beta.empty()) return {};
    std::vector<std::int64_t> head;
    head.reserve(bp.size());
    for (std::size_t i = 0; i < bp.size(); ++i) {
        head.push_back(static_cast<std::int64_t>(i) + 1 +
                       (bp[i] - 1 - profile.gamma) / profile.mu);
    }
    std::vector<std::int64_t> parts = head;
    for (const auto& [size, mult] : prescribed_tail(head, profile)) {
        parts.insert(parts.end(), static_cast<std::size_t>(mult), size);
    }
    Partition out = Partition::from_sorted(std::move(parts));
    check_weight(beta, out, "sylvester_general_inverse");
    return out;
}

std::vector<Partition> generate_symmetric(std::int64_t n, const SymmetricProfile& profile) {
    std::vector<Partition> out;
    enumerate(n, ConstraintSpec::distinct_residue(profile), [&](const Partition& beta) {
        out.push_back(sylvester_general_inverse(beta, profile));
        return true;
    });
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Partition> symmetric_partitions_by_filter(std::int64_t n,
                                                      const SymmetricProfile& profile) {
    std::vector<Partition> out;
    enumerate(n, ConstraintSpec::all(), [&](const Partition& p) {
        if (is_symmetric(p, profile)) out.push_back(p);
        return true;
    });
    return out;
}

std::pair<BigInt, BigInt> split_by_order_parity(std::int64_t n,
                                                const SymmetricProfile& profile) {
    BigInt even = 0, odd = 0;
    for (const Partition& p : generate_symmetric(n, profile)) {
        (p.order() % 2 == 0 ? even : odd) += 1;
    }
    return {even, odd};
}

std::vector<std::pair<Partition, Partition>>
correspondence_table(std::int64_t n, const SymmetricProfile& profile) {
    std::vector<std::pair<Partition, Partition>> rows;
    enumerate(n, ConstraintSpec::distinct_residue(profile), [&](const Partition& beta) {
        rows.emplace_back(beta, sylvester_general_inverse(beta, profile));
        return true;
    });
    return rows;
}

} // namespace partita
