#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace partita {

/// Structured outcome of one identity check. Reports are reproducible: the
/// same inputs yield the same report up to elapsed time.
struct VerificationReport {
    std::string identity;
    std::map<std::string, std::int64_t> params;
    std::int64_t range_lo = 0;
    std::int64_t range_hi = 0;
    bool pass = true;

    struct Counterexample {
        std::int64_t n = 0;
        std::string lhs;
        std::string rhs;
        std::string check; // which sub-check failed
    };
    /// Present iff the check failed; carries the smallest failing n.
    std::optional<Counterexample> first_failure;
    double elapsed_seconds = 0.0;

    /// Records a failure, keeping the minimal-n counterexample.
    void fail(std::int64_t n, std::string lhs, std::string rhs, std::string check);
    /// Convenience: records a failure when lhs != rhs.
    template <typename L, typename R>
    void expect_eq(std::int64_t n, const L& lhs, const R& rhs, const char* check);

    std::string to_json() const;
};

template <typename L, typename R>
void VerificationReport::expect_eq(std::int64_t n, const L& lhs, const R& rhs,
                                   const char* check) {
    if (!(lhs == rhs)) {
        auto str = [](const auto& v) {
            if constexpr (requires { v.str(); }) return v.str();
            else return std::to_string(v);
        };
        fail(n, str(lhs), str(rhs), check);
    }
}

std::string reports_to_json(const std::vector<VerificationReport>& reports);
void print_report_table(const std::vector<VerificationReport>& reports, std::ostream& os);
bool all_pass(const std::vector<VerificationReport>& reports);

} // namespace partita
