#include "partita/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace partita {

void VerificationReport::fail(std::int64_t n, std::string lhs, std::string rhs,
                              std::string check) {
    pass = false;
    if (!first_failure || n < first_failure->n) {
        first_failure = Counterexample{n, std::move(lhs), std::move(rhs), std::move(check)};
    }
}

namespace {

nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["range"] = {r.range_lo, r.range_hi};
    j["status"] = r.pass ? "pass" : "fail";
    if (r.first_failure) {
        j["first_failure"] = {{"n", r.first_failure->n},
                              {"lhs", r.first_failure->lhs},
                              {"rhs", r.first_failure->rhs},
                              {"check", r.first_failure->check}};
    } else {
        j["first_failure"] = nullptr;
    }
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

} // namespace

std::string VerificationReport::to_json() const { return report_json(*this).dump(); }

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump();
}

void print_report_table(const std::vector<VerificationReport>& reports, std::ostream& os) {
    std::size_t id_width = 8, param_width = 6;
    std::vector<std::string> param_strs;
    for (const auto& r : reports) {
        std::string ps;
        for (const auto& [key, value] : r.params) {
            if (!ps.empty()) ps += ' ';
            ps += key + "=" + std::to_string(value);
        }
        param_strs.push_back(ps);
        id_width = std::max(id_width, r.identity.size());
        param_width = std::max(param_width, ps.size());
    }
    os << std::left << std::setw(static_cast<int>(id_width) + 2) << "identity"
       << std::setw(static_cast<int>(param_width) + 2) << "params"
       << std::setw(14) << "range" << std::setw(8) << "status"
       << std::right << std::setw(9) << "time" << '\n';
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        std::ostringstream range;
        range << '[' << r.range_lo << ", " << r.range_hi << ']';
        std::ostringstream time;
        time << std::fixed << std::setprecision(3) << r.elapsed_seconds << 's';
        os << std::left << std::setw(static_cast<int>(id_width) + 2) << r.identity
           << std::setw(static_cast<int>(param_width) + 2) << param_strs[i]
           << std::setw(14) << range.str() << std::setw(8) << (r.pass ? "pass" : "FAIL")
           << std::right << std::setw(9) << time.str() << '\n';
        if (r.first_failure) {
            os << "    first failure at n = " << r.first_failure->n << " ["
               << r.first_failure->check << "]: lhs = " << r.first_failure->lhs
               << ", rhs = " << r.first_failure->rhs << '\n';
        }
    }
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.pass; });
}

} // namespace partita
