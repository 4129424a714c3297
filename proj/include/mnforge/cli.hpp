#pragma once

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "mnforge/algebra.hpp"
#include "mnforge/errors.hpp"
#include "mnforge/parse.hpp"
#include "mnforge/series.hpp"
#include "mnforge/verify.hpp"

namespace mnforge {

namespace detail {

inline std::vector<Rational> parse_rational_csv(const std::string& text) {
    std::vector<Rational> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) out.push_back(parse_rational(cur));
    return out;
}

inline PrimeTable prime_table_from_csv(const std::string& text) {
    if (text.empty()) return PrimeTable();
    std::vector<std::int64_t> primes;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) {
        Int v = parse_integer(cur);
        if (v <= 0) throw BadArguments("prime table entries must be positive");
        primes.push_back(static_cast<std::int64_t>(v));
    }
    return PrimeTable(primes);
}

// Structured record for a series: one entry per term, preserving exactness by
// rendering every number as text.
inline nlohmann::ordered_json series_record(const Series& s) {
    nlohmann::ordered_json rec;
    rec["schema"] = "mnforge/1";
    rec["kind"] = "series";
    if (s.truncation())
        rec["truncation"] = *s.truncation();
    else
        rec["truncation"] = nullptr;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [w, c] : s.terms()) {
        nlohmann::ordered_json term;
        nlohmann::ordered_json word = nlohmann::ordered_json::array();
        for (const auto& [i, n] : w.exponents())
            word.push_back({i, to_string(n)});
        term["word"] = std::move(word);
        nlohmann::ordered_json coeff = nlohmann::ordered_json::array();
        for (const auto& [mask, q] : c.terms()) {
            nlohmann::ordered_json piece;
            piece["mask"] = std::vector<std::uint32_t>(mask.begin(), mask.end());
            piece["value"] = to_string(q);
            coeff.push_back(std::move(piece));
        }
        term["coeff"] = std::move(coeff);
        terms.push_back(std::move(term));
    }
    rec["terms"] = std::move(terms);
    return rec;
}

inline AlgebraParams algebra_params_from_flags(const PrimeTable& tab, std::uint32_t n,
                                               const std::string& a_csv,
                                               const std::string& b_csv) {
    AlgebraParams defaults = AlgebraParams::defaults(tab, n);
    std::vector<Rational> a = a_csv.empty() ? defaults.a : parse_rational_csv(a_csv);
    std::vector<Rational> b = b_csv.empty() ? defaults.b : parse_rational_csv(b_csv);
    return AlgebraParams(n, std::move(a), std::move(b));
}

}  // namespace detail

// Runs one CLI invocation.  `args` excludes the program name.  All regular
// output goes to `out`; diagnostics and timing go to `err`, keeping `out`
// byte-stable for identical arguments and configuration.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"twisted series workbench"};
    app.require_subcommand(1);

    std::string primes_csv;
    std::uint32_t depth = 8;
    bool json_output = false;
    app.add_option("--primes", primes_csv,
                   "comma-separated increasing primes overriding the default table")
        ->envname("MNFORGE_PRIMES");
    app.add_option("--depth", depth, "default inversion depth")
        ->envname("MNFORGE_DEPTH")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", json_output, "emit structured records instead of plain text");

    std::string expr_text;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expr", expr_text, "expression to evaluate")->required();

    std::string central_text;
    CLI::App* central_cmd =
        app.add_subcommand("central", "decide centrality of an exact series");
    central_cmd->add_option("expr", central_text, "expression to test")->required();

    std::string word_a, word_b;
    CLI::App* order_cmd = app.add_subcommand("order", "compare two group words");
    order_cmd->add_option("left", word_a, "left word")->required();
    order_cmd->add_option("right", word_b, "right word")->required();

    std::uint32_t gw_N = 0, gw_deg = 0;
    CLI::App* gamma_cmd =
        app.add_subcommand("gamma-witness", "coefficient of the staircase word in a gamma power");
    gamma_cmd->add_option("--N", gw_N, "truncation length")->required()->check(CLI::PositiveNumber);
    gamma_cmd->add_option("--deg", gw_deg, "power to expand")->required()->check(CLI::PositiveNumber);

    std::uint32_t cz_n = 0;
    std::string cz_a, cz_b;
    CLI::App* cz_cmd = app.add_subcommand("centralizer", "centralizer dimension of A_n");
    cz_cmd->add_option("--n", cz_n, "number of quaternion-type factors")->required();
    cz_cmd->add_option("--a", cz_a, "comma-separated values of u_i^2");
    cz_cmd->add_option("--b", cz_b, "comma-separated values of v_i^2");

    std::uint32_t nm_n = 0;
    std::string nm_a, nm_b, nm_coords;
    CLI::App* norm_cmd = app.add_subcommand("norm", "regular norm of an element of A_n");
    norm_cmd->add_option("--n", nm_n, "number of quaternion-type factors")->required();
    norm_cmd->add_option("--a", nm_a, "comma-separated values of u_i^2");
    norm_cmd->add_option("--b", nm_b, "comma-separated values of v_i^2");
    norm_cmd->add_option("coords", nm_coords, "comma-separated coordinates, length 4^n")
        ->required();

    std::string suite;
    std::uint64_t seed = 7;
    std::uint32_t trials = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd
        ->add_option("suite", suite,
                     "one of: field, order, series, center, gamma, algebra, herstein, all")
        ->required();
    verify_cmd->add_option("--seed", seed, "base seed for the random streams")
        ->envname("MNFORGE_SEED");
    verify_cmd->add_option("--trials", trials, "override randomized trial counts (0 = defaults)")
        ->envname("MNFORGE_TRIALS");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        PrimeTable tab = detail::prime_table_from_csv(primes_csv);
        EvalConfig ecfg{.tab = tab, .default_depth = depth, .max_pow = 4096};

        if (*eval_cmd) {
            Series s = eval_text(ecfg, expr_text);
            if (json_output) {
                out << detail::series_record(s).dump() << "\n";
            } else {
                out << to_string(s) << "\n";
                if (s.truncation()) out << "truncation: " << *s.truncation() << "\n";
            }
            return 0;
        }

        if (*central_cmd) {
            Series s = eval_text(ecfg, central_text);
            bool central = is_central(s);
            bool window = commutation_window_test(tab, s);
            if (json_output) {
                nlohmann::ordered_json rec;
                rec["schema"] = "mnforge/1";
                rec["kind"] = "central";
                rec["central"] = central;
                rec["window_test"] = window;
                out << rec.dump() << "\n";
            } else {
                out << "central: " << (central ? "true" : "false") << "\n";
                out << "window-test: " << (window ? "true" : "false") << "\n";
            }
            return central == window ? 0 : 1;
        }

        if (*order_cmd) {
            GroupWord a = parse_word(word_a);
            GroupWord b = parse_word(word_b);
            const char* rel = a < b ? "LT" : (b < a ? "GT" : "EQ");
            if (json_output) {
                nlohmann::ordered_json rec;
                rec["schema"] = "mnforge/1";
                rec["kind"] = "order";
                rec["relation"] = rel;
                out << rec.dump() << "\n";
            } else {
                out << rel << "\n";
            }
            return 0;
        }

        if (*gamma_cmd) {
            Rational w = gamma_coefficient_witness(tab, gw_N, gw_deg);
            if (json_output) {
                nlohmann::ordered_json rec;
                rec["schema"] = "mnforge/1";
                rec["kind"] = "gamma-witness";
                rec["N"] = gw_N;
                rec["deg"] = gw_deg;
                rec["witness"] = to_string(w);
                rec["absent_below_degree"] = true;
                out << rec.dump() << "\n";
            } else {
                out << to_string(w) << "\n";
                out << "absent-below-degree: true\n";
            }
            return 0;
        }

        if (*cz_cmd) {
            AlgebraParams p = detail::algebra_params_from_flags(tab, cz_n, cz_a, cz_b);
            std::size_t dim = centralizer_dimension(p);
            if (json_output) {
                nlohmann::ordered_json rec;
                rec["schema"] = "mnforge/1";
                rec["kind"] = "centralizer";
                rec["n"] = cz_n;
                rec["dimension"] = dim;
                out << rec.dump() << "\n";
            } else {
                out << dim << "\n";
            }
            return 0;
        }

        if (*norm_cmd) {
            AlgebraParams p = detail::algebra_params_from_flags(tab, nm_n, nm_a, nm_b);
            std::vector<Rational> coords = detail::parse_rational_csv(nm_coords);
            if (coords.size() != p.dim())
                throw BadArguments("expected " + std::to_string(p.dim()) + " coordinates");
            Rational value = norm(p, AlgebraElem(std::move(coords)));
            if (json_output) {
                nlohmann::ordered_json rec;
                rec["schema"] = "mnforge/1";
                rec["kind"] = "norm";
                rec["n"] = nm_n;
                rec["value"] = to_string(value);
                out << rec.dump() << "\n";
            } else {
                out << to_string(value) << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            VerifyConfig vcfg;
            vcfg.tab = tab;
            vcfg.seed = seed;
            vcfg.trials = trials;
            vcfg.depth = depth;
            std::vector<std::string> names;
            if (suite == "all")
                names = all_suite_names();
            else
                names.push_back(suite);
            std::uint64_t total_failures = 0;
            nlohmann::ordered_json suites = nlohmann::ordered_json::array();
            for (const std::string& name : names) {
                SuiteResult res = run_suite(name, vcfg);
                out << "suite=" << res.name << " checks=" << res.checks
                    << " failures=" << res.failures << " seed=" << seed << "\n";
                err << "suite=" << res.name << " elapsed_ms=" << std::fixed
                    << std::setprecision(2) << res.elapsed_ms << "\n";
                for (const std::string& m : res.messages) err << "  failed: " << m << "\n";
                nlohmann::ordered_json jr;
                jr["name"] = res.name;
                jr["checks"] = res.checks;
                jr["failures"] = res.failures;
                suites.push_back(std::move(jr));
                total_failures += res.failures;
            }
            nlohmann::ordered_json rec;
            rec["schema"] = "mnforge/1";
            rec["kind"] = "verify";
            rec["seed"] = seed;
            rec["trials"] = trials;
            rec["failures"] = total_failures;
            rec["suites"] = std::move(suites);
            out << rec.dump() << "\n";
            return total_failures == 0 ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    err << "no subcommand selected\n";
    return 2;
}

}  // namespace mnforge
