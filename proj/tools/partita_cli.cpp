#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "partita/enumerate.hpp"
#include "partita/glaisher.hpp"
#include "partita/qseries.hpp"
#include "partita/report.hpp"
#include "partita/symmetric.hpp"
#include "partita/verify.hpp"

using namespace partita;

namespace {

struct FamilyArgs {
    std::string name;
    std::int64_t p = 0;
    std::int64_t k = 0;
    std::int64_t t = 0;
    std::int64_t mu = 0;
    std::int64_t gamma = -1;
    std::int64_t i = 0;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args) {
    cmd->add_option("--family", args.name,
                    "family: all, b, c, r, f, distinct, distinct-odd, self-conjugate, "
                    "symmetric, distinct-residue, mod9, slater1-family, slater2-family")
        ->required();
    cmd->add_option("--p", args.p, "parameter p (families b, c, r, f)");
    cmd->add_option("--k", args.k, "parameter k (families b, c)");
    cmd->add_option("--t", args.t, "parameter t (family f)");
    cmd->add_option("--mu", args.mu, "parameter mu (symmetric, distinct-residue)");
    cmd->add_option("--gamma", args.gamma, "parameter gamma (symmetric, distinct-residue)");
    cmd->add_option("--i", args.i, "parameter i (family mod9: parts != 0, +-i mod 9)");
}

ConstraintSpec make_family(const FamilyArgs& a) {
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) {
            throw std::invalid_argument("family '" + a.name + "' " + what);
        }
    };
    if (a.name == "all") return ConstraintSpec::all();
    if (a.name == "b") {
        need(a.p >= 2 && a.k >= 2, "requires --p >= 2 and --k >= 2");
        return ConstraintSpec::b_family(a.p, a.k);
    }
    if (a.name == "c") {
        need(a.p >= 2 && a.k >= 2, "requires --k >= 2 and --p >= 2");
        return ConstraintSpec::c_family(a.k, a.p);
    }
    if (a.name == "r") {
        need(a.k >= 2 || a.p >= 2, "requires --k >= 2 (or --p)");
        return ConstraintSpec::r_family(a.k >= 2 ? a.k : a.p);
    }
    if (a.name == "f") {
        need(a.p >= 2 && a.t >= 1, "requires --p >= 2 and --t >= 1");
        return ConstraintSpec::f_family(a.p, a.t);
    }
    if (a.name == "distinct") return ConstraintSpec::distinct_parts();
    if (a.name == "distinct-odd") return ConstraintSpec::distinct_odd();
    if (a.name == "self-conjugate") return ConstraintSpec::self_conjugate();
    if (a.name == "symmetric") {
        need(a.mu >= 2 && a.gamma >= 0, "requires --mu >= 2 and --gamma >= 0");
        return ConstraintSpec::symmetric(SymmetricProfile(a.mu, a.gamma));
    }
    if (a.name == "distinct-residue") {
        need(a.mu >= 2 && a.gamma >= 0, "requires --mu >= 2 and --gamma >= 0");
        return ConstraintSpec::distinct_residue(SymmetricProfile(a.mu, a.gamma));
    }
    if (a.name == "mod9") {
        need(a.i >= 1 && a.i <= 8, "requires --i in 1..8");
        return ConstraintSpec::mod9_avoiding(a.i);
    }
    if (a.name == "slater1-family") return ConstraintSpec::slater1_family();
    if (a.name == "slater2-family") return ConstraintSpec::slater2_family();
    throw std::invalid_argument("unknown family '" + a.name + "'");
}

struct Output {
    std::string format = "plain"; // plain | json | csv
};

void add_format_option(CLI::App* cmd, Output& out) {
    cmd->add_option("--format", out.format, "output format: plain, json or csv")
        ->envname("PARTITA_FORMAT")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
}

std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return '"' + s + '"';
}

int run_count(const FamilyArgs& fam, std::optional<std::int64_t> n,
              std::optional<std::int64_t> upto, const Output& out) {
    ConstraintSpec spec = make_family(fam);
    if (n && upto) throw std::invalid_argument("use either --n or --upto, not both");
    if (!n && !upto) throw std::invalid_argument("count requires --n or --upto");
    if (n) {
        BigInt c = count(*n, spec);
        if (out.format == "json") {
            nlohmann::json j{{"family", spec.label()},
                             {"params", spec.params()},
                             {"n", *n},
                             {"count", c.str()}};
            std::cout << j.dump() << '\n';
        } else if (out.format == "csv") {
            std::cout << "n,count\n" << *n << ',' << c << '\n';
        } else {
            std::cout << c << '\n';
        }
        return 0;
    }
    CountTable table = CountTable::build(spec, *upto);
    if (out.format == "json") {
        std::cout << table.to_json() << '\n';
    } else if (out.format == "csv") {
        table.write_csv(std::cout);
    } else {
        for (std::size_t i = 0; i < table.counts.size(); ++i) {
            std::cout << i << ' ' << table.counts[i] << '\n';
        }
    }
    return 0;
}

int run_enumerate(const FamilyArgs& fam, std::int64_t n, bool exponent, const Output& out) {
    ConstraintSpec spec = make_family(fam);
    auto members = enumerate_all(n, spec);
    if (out.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& p : members) arr.push_back(p.str(exponent));
        std::cout << arr.dump() << '\n';
    } else if (out.format == "csv") {
        std::cout << "partition\n";
        for (const auto& p : members) std::cout << csv_field(p.str(exponent)) << '\n';
    } else {
        for (const auto& p : members) std::cout << p.str(exponent) << '\n';
    }
    return 0;
}

int run_map(const std::string& bijection, const std::string& partition_text,
            std::optional<std::int64_t> table_n, const std::string& direction,
            const FamilyArgs& fam, bool with_trace, const Output& out) {
    if (table_n) {
        if (bijection != "sylvester") {
            throw std::invalid_argument("--table-n is only available for --bijection sylvester");
        }
        SymmetricProfile profile(fam.mu, fam.gamma);
        auto rows = correspondence_table(*table_n, profile);
        if (out.format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [beta, lambda] : rows) {
                arr.push_back({beta.str(true), lambda.str(true)});
            }
            std::cout << arr.dump() << '\n';
        } else if (out.format == "csv") {
            std::cout << "distinct,symmetric\n";
            for (const auto& [beta, lambda] : rows) {
                std::cout << csv_field(beta.str(true)) << ',' << csv_field(lambda.str(true))
                          << '\n';
            }
        } else {
            for (const auto& [beta, lambda] : rows) {
                std::cout << beta.str(true) << " -> " << lambda.str(true) << '\n';
            }
        }
        return 0;
    }

    Partition input = parse_partition(partition_text);
    BijectionTrace trace;
    BijectionTrace* tr = with_trace ? &trace : nullptr;
    Partition result;
    if (bijection == "sylvester") {
        SymmetricProfile profile(fam.mu, fam.gamma);
        if (direction == "to-distinct") {
            result = sylvester_general(input, profile);
        } else if (direction == "to-symmetric") {
            result = sylvester_general_inverse(input, profile);
        } else {
            throw std::invalid_argument("--direction must be to-symmetric or to-distinct");
        }
        if (tr) tr->record("sylvester", input, result);
    } else if (bijection == "glaisher-merge") {
        if (fam.k < 2) throw std::invalid_argument("glaisher-merge requires --k >= 2");
        result = glaisher_merge(input, fam.k, tr);
    } else if (bijection == "glaisher-split") {
        if (fam.k < 2) throw std::invalid_argument("glaisher-split requires --k >= 2");
        result = glaisher_split(input, fam.k, tr);
    } else if (bijection == "phi") {
        result = phi(input, fam.p, fam.k, tr);
    } else if (bijection == "phi-inverse") {
        result = phi_inverse(input, fam.p, fam.k, tr);
    } else if (bijection == "f-to-r") {
        result = f_to_r(input, fam.p, fam.t, tr);
    } else if (bijection == "r-to-f") {
        result = r_to_f(input, fam.p, fam.t, tr);
    } else {
        throw std::invalid_argument("unknown bijection '" + bijection + "'");
    }

    if (out.format == "json") {
        nlohmann::json j{{"bijection", bijection},
                         {"input", input.str(true)},
                         {"output", result.str(true)}};
        if (with_trace) {
            nlohmann::json steps = nlohmann::json::array();
            for (const auto& s : trace.steps) {
                steps.push_back(
                    {{"rule", s.rule}, {"before", s.before.str(true)}, {"after", s.after.str(true)}});
            }
            j["trace"] = steps;
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << result.str(true) << '\n';
        if (with_trace) trace.write_jsonl(std::cout);
    }
    return 0;
}

int run_series(const std::string& name, const FamilyArgs& fam, std::int64_t order,
               std::int64_t m, int sign, int component, const Output& out) {
    TruncatedSeries series(0);
    if (!name.empty()) {
        if (name == "pentagonal") {
            series = theta_pentagonal(order);
        } else if (name == "gauss-theta") {
            series = theta_gauss(order);
        } else if (name == "jacobi-triple") {
            series = jacobi_triple(m, sign, order);
        } else if (name == "symmetric-sum") {
            series = gf_symmetric_sum(SymmetricProfile(fam.mu, fam.gamma), order);
        } else if (name == "even-order-sum") {
            series = gf_even_order_sum(SymmetricProfile(fam.mu, fam.gamma), order);
        } else if (name == "odd-order-sum") {
            series = gf_odd_order_sum(SymmetricProfile(fam.mu, fam.gamma), order);
        } else if (name == "slater1-sum") {
            series = gf_slater1_sum(order);
        } else if (name == "slater1-product") {
            series = gf_slater1_product(order);
        } else if (name == "slater2-sum") {
            series = gf_slater2_sum(order);
        } else if (name == "slater2-product") {
            series = gf_slater2_product(order);
        } else if (name == "dissection-component") {
            series = gf_three_dissection_component_raw(component, order);
        } else {
            throw std::invalid_argument("unknown series '" + name + "'");
        }
    } else {
        series = gf(make_family(fam), order);
    }
    if (out.format == "json") std::cout << series.to_json() << '\n';
    else std::cout << series.str() << '\n';
    return 0;
}

int run_dissect(const FamilyArgs& fam, std::int64_t modulus, std::int64_t residue,
                std::int64_t order, const Output& out) {
    TruncatedSeries series = gf(make_family(fam), order).dissected(modulus, residue);
    if (out.format == "json") std::cout << series.to_json() << '\n';
    else std::cout << series.str() << '\n';
    return 0;
}

int run_verify(const std::string& suite, std::int64_t order, std::int64_t enum_order,
               const FamilyArgs& fam, std::int64_t ell, std::int64_t alpha, const Output& out) {
    std::vector<VerificationReport> reports;
    verify::Options opts{order, enum_order};
    if (suite == "all") {
        reports = verify::run_all(opts);
    } else if (suite == "classical-q") {
        reports = verify::classical_q_identities(order);
    } else if (suite == "alladi-schur") {
        reports.push_back(verify::alladi_schur(order, enum_order));
    } else if (suite == "glaisher-duality") {
        if (fam.p >= 2 && fam.k >= 2) {
            reports.push_back(verify::glaisher_duality(order, fam.p, fam.k, enum_order));
        } else {
            for (auto [p, k] : {std::pair{3, 2}, {2, 3}, {2, 4}, {4, 2}, {3, 4}, {4, 6}}) {
                reports.push_back(verify::glaisher_duality(order, p, k, enum_order));
            }
        }
    } else if (suite == "f-equals-r") {
        if (fam.p >= 2 && fam.t >= 1) {
            reports.push_back(verify::f_equals_r(order, fam.p, fam.t, enum_order));
        } else {
            for (std::int64_t p = 2; p <= 5; ++p) {
                for (std::int64_t t = 1; t <= 3; ++t) {
                    reports.push_back(verify::f_equals_r(order, p, t, enum_order));
                }
            }
        }
    } else if (suite == "f-sum") {
        if (fam.p >= 2 && ell >= 1) {
            reports.push_back(verify::f_sum_divisibility(order, fam.p, ell));
        } else {
            for (std::int64_t p = 2; p <= 5; ++p) {
                for (std::int64_t l = 2; l <= 5; ++l) {
                    reports.push_back(verify::f_sum_divisibility(std::min<std::int64_t>(order, 200), p, l));
                }
            }
        }
    } else if (suite == "fo-recurrence") {
        if (fam.t >= 1) {
            reports.push_back(verify::fo_recurrence(order, fam.t));
        } else {
            for (std::int64_t t = 1; t <= 3; ++t) {
                reports.push_back(verify::fo_recurrence(std::min<std::int64_t>(order, 200), t));
            }
        }
    } else if (suite == "three-dissection") {
        reports.push_back(verify::three_dissection(order, 150, enum_order));
    } else if (suite == "generalized-sylvester") {
        if (fam.mu >= 2 && fam.gamma >= 0) {
            reports.push_back(verify::generalized_sylvester(order, fam.mu, fam.gamma));
        } else {
            for (std::int64_t mu = 2; mu <= 6; ++mu) {
                for (std::int64_t gamma = 0; gamma <= 4; ++gamma) {
                    reports.push_back(verify::generalized_sylvester(
                        std::min<std::int64_t>(order, 200), mu, gamma));
                }
            }
        }
    } else if (suite == "even-order-mod16" || suite == "odd-order-mod16") {
        auto one = suite == "even-order-mod16" ? verify::even_order_mod16 : verify::odd_order_mod16;
        if (alpha >= 2) {
            reports.push_back(one(order, alpha, enum_order));
        } else {
            for (std::int64_t a : {2, 4, 6}) {
                reports.push_back(one(std::min<std::int64_t>(order, 150), a, enum_order));
            }
        }
    } else if (suite == "slater") {
        reports.push_back(verify::slater_identities(order));
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }

    if (out.format == "json") std::cout << reports_to_json(reports) << '\n';
    else print_report_table(reports, std::cout);
    return all_pass(reports) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"partita: exact partition counting, bijections, q-series and identity checks"};
    app.require_subcommand(1);

    FamilyArgs fam;
    Output out;

    auto* count_cmd = app.add_subcommand("count", "count the partitions of n in a family");
    count_cmd->footer("CSV columns: n,count");
    FamilyArgs count_fam;
    Output count_out;
    std::optional<std::int64_t> count_n, count_upto;
    add_family_options(count_cmd, count_fam);
    count_cmd->add_option("--n", count_n, "weight n");
    count_cmd->add_option("--upto", count_upto, "emit the whole table for n = 0..upto");
    add_format_option(count_cmd, count_out);

    auto* enum_cmd = app.add_subcommand("enumerate", "list the partitions of n in a family");
    enum_cmd->footer("CSV columns: partition (quoted when it contains commas)");
    FamilyArgs enum_fam;
    Output enum_out;
    std::int64_t enum_n = 0;
    bool enum_exponent = false;
    add_family_options(enum_cmd, enum_fam);
    enum_cmd->add_option("--n", enum_n, "weight n")->required();
    enum_cmd->add_flag("--exponent", enum_exponent, "print with exponent shorthand");
    add_format_option(enum_cmd, enum_out);

    auto* map_cmd = app.add_subcommand("map", "apply a bijection to a partition");
    map_cmd->footer("CSV columns (--table-n): distinct,symmetric (quoted when they contain commas)");
    Output map_out;
    std::string map_bijection, map_partition, map_direction = "to-symmetric";
    std::optional<std::int64_t> map_table_n;
    bool map_trace = false;
    map_cmd->add_option("--bijection", map_bijection,
                        "sylvester, glaisher-merge, glaisher-split, phi, phi-inverse, "
                        "f-to-r, r-to-f")
        ->required();
    map_cmd->add_option("--partition", map_partition,
                        "partition in exponent shorthand, e.g. \"4,2^2,1^2\"");
    map_cmd->add_option("--direction", map_direction,
                        "sylvester direction: to-symmetric (default) or to-distinct");
    map_cmd->add_option("--table-n", map_table_n,
                        "emit the full sylvester correspondence table for weight n");
    map_cmd->add_option("--p", fam.p, "parameter p (phi, f-to-r, r-to-f)");
    map_cmd->add_option("--k", fam.k, "parameter k (glaisher, phi)");
    map_cmd->add_option("--t", fam.t, "parameter t (f-to-r, r-to-f)");
    map_cmd->add_option("--mu", fam.mu, "parameter mu (sylvester)");
    map_cmd->add_option("--gamma", fam.gamma, "parameter gamma (sylvester)");
    map_cmd->add_flag("--trace", map_trace, "emit the rewriting trace as JSON lines");
    add_format_option(map_cmd, map_out);

    auto* series_cmd = app.add_subcommand("series", "expand a generating series");
    FamilyArgs series_fam;
    Output series_out;
    std::string series_name;
    std::int64_t series_order = 300, series_m = 0;
    int series_sign = 1, series_component = 0;
    series_cmd->add_option("--family", series_fam.name, "family generating series (see count)");
    series_cmd->add_option("--name", series_name,
                           "named series: pentagonal, gauss-theta, jacobi-triple, "
                           "symmetric-sum, even-order-sum, odd-order-sum, slater1-sum, "
                           "slater1-product, slater2-sum, slater2-product, dissection-component");
    series_cmd->add_option("--order", series_order, "truncation order (default 300)");
    series_cmd->add_option("--p", series_fam.p, "family parameter p");
    series_cmd->add_option("--k", series_fam.k, "family parameter k");
    series_cmd->add_option("--t", series_fam.t, "family parameter t");
    series_cmd->add_option("--mu", series_fam.mu, "parameter mu");
    series_cmd->add_option("--gamma", series_fam.gamma, "parameter gamma");
    series_cmd->add_option("--i", series_fam.i, "family parameter i (mod9)");
    series_cmd->add_option("--m", series_m, "jacobi-triple specialization w = sign*q^m");
    series_cmd->add_option("--sign", series_sign, "jacobi-triple sign (+1 or -1)");
    series_cmd->add_option("--component", series_component, "dissection component (0, 1 or 2)");
    add_format_option(series_cmd, series_out);

    auto* dissect_cmd = app.add_subcommand("dissect", "extract an arithmetic progression of coefficients");
    FamilyArgs dissect_fam;
    Output dissect_out;
    std::int64_t dissect_mod = 0, dissect_res = 0, dissect_order = 300;
    add_family_options(dissect_cmd, dissect_fam);
    dissect_cmd->add_option("--modulus", dissect_mod, "progression modulus d")->required();
    dissect_cmd->add_option("--residue", dissect_res, "progression residue r")->required();
    dissect_cmd->add_option("--order", dissect_order, "truncation order before dissection");
    add_format_option(dissect_cmd, dissect_out);

    auto* verify_cmd = app.add_subcommand("verify", "run identity verification suites");
    FamilyArgs verify_fam;
    Output verify_out;
    std::string verify_suite = "all";
    std::int64_t verify_order = 300, verify_enum = 40, verify_ell = 0, verify_alpha = 0;
    verify_cmd->add_option("--suite", verify_suite,
                           "all, classical-q, alladi-schur, glaisher-duality, f-equals-r, "
                           "f-sum, fo-recurrence, three-dissection, generalized-sylvester, "
                           "even-order-mod16, odd-order-mod16, slater");
    verify_cmd->add_option("--order", verify_order, "series truncation order (default 300)");
    verify_cmd->add_option("--enum-order", verify_enum, "enumeration weight cap (default 40)");
    verify_cmd->add_option("--p", verify_fam.p, "suite parameter p");
    verify_cmd->add_option("--k", verify_fam.k, "suite parameter k");
    verify_cmd->add_option("--t", verify_fam.t, "suite parameter t");
    verify_cmd->add_option("--mu", verify_fam.mu, "suite parameter mu");
    verify_cmd->add_option("--gamma", verify_fam.gamma, "suite parameter gamma");
    verify_cmd->add_option("--ell", verify_ell, "suite parameter ell (f-sum)");
    verify_cmd->add_option("--alpha", verify_alpha, "suite parameter alpha (mod16 suites)");
    add_format_option(verify_cmd, verify_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (count_cmd->parsed()) return run_count(count_fam, count_n, count_upto, count_out);
        if (enum_cmd->parsed()) return run_enumerate(enum_fam, enum_n, enum_exponent, enum_out);
        if (map_cmd->parsed()) {
            return run_map(map_bijection, map_partition, map_table_n, map_direction, fam,
                           map_trace, map_out);
        }
        if (series_cmd->parsed()) {
            return run_series(series_name, series_fam, series_order, series_m, series_sign,
                              series_component, series_out);
        }
        if (dissect_cmd->parsed()) {
            return run_dissect(dissect_fam, dissect_mod, dissect_res, dissect_order, dissect_out);
        }
        if (verify_cmd->parsed()) {
            return run_verify(verify_suite, verify_order, verify_enum, verify_fam, verify_ell,
                              verify_alpha, verify_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
