// gosszeta: exact evaluation and verification of the Goss zeta refinement
// over F_q((1/T)).
//
// Subcommands: eval-zeta, special, verify, bounds, power-sums.
// Exit codes: 0 success / verified, 1 usage or domain error, 2 mismatch.

#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gosszeta/diffop.hpp"
#include "gosszeta/io.hpp"

using namespace gosszeta;
using ordered_json = nlohmann::ordered_json;

namespace {

ZetaSign sign_from(const std::string& name) {
    if (name == "proof") return ZetaSign::proof;
    if (name == "definition") return ZetaSign::definition;
    fail(Err::Unsupported, "zeta-sign must be 'proof' or 'definition'");
}

ordered_json corrections_json(const std::vector<CorrectionInfo>& infos) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : infos)
        arr.push_back(ordered_json{{"i", c.i},
                                   {"binom", c.binom},
                                   {"bound", c.bound},
                                   {"val", c.valuation},
                                   {"vanishes", c.vanishes}});
    return arr;
}

void print_corrections(std::ostream& os, const std::vector<CorrectionInfo>& infos) {
    for (const auto& c : infos) {
        os << "  i=" << c.i << "  binom=" << c.binom << "  bound=" << c.bound;
        if (c.vanishes)
            os << "  v_inf>=" << c.valuation << " (vanishes)";
        else
            os << "  v_inf=" << c.valuation;
        os << "\n";
    }
}

struct CommonArgs {
    std::string field_spec;
    std::string a_text;
    std::string s_text = "1";
    std::int64_t prec = 16;
    std::size_t digits = kDefaultDigitPrecision;
    std::string zeta_sign = "proof";
    int threads = 1;
    bool json = false;
};

int cmd_verify(const CommonArgs& args) {
    const Fq F = parse_field_spec(args.field_spec);
    const LaurentSeries a = parse_poly(F, args.a_text, args.prec);
    if (a.is_zero() || a.val() >= 0)
        fail(Err::NotInA, "a must satisfy |a| > 1 (val(a) < 0)");
    const std::int64_t m = -a.val();
    if (args.prec < 4) fail(Err::BadPrecision, "verify needs --prec >= 4");
    if (digits_needed(std::uint64_t(args.prec * (m + 1)), F.p()) > args.digits)
        fail(Err::BadPrecision, "digit precision K too small for N*(m+1); raise --digits");
    const PadicInt s = parse_padic(F.p(), args.s_text, args.digits);

    OperatorOptions opts;
    opts.sign = sign_from(args.zeta_sign);
    opts.threads = args.threads;
    const VerificationReport rep = verify_difference_equation(a, s, args.prec, opts);

    if (args.json) {
        ordered_json meta{{"a", series_to_json(a)},
                          {"s", args.s_text},
                          {"prec", args.prec},
                          {"convention", args.zeta_sign},
                          {"l_star", rep.l_star},
                          {"i_star", rep.i_star},
                          {"matched_prec", rep.matched_prec},
                          {"term_valuations", corrections_json(rep.corrections)},
                          {"rhs", series_to_json(rep.rhs)}};
        ordered_json out{{"field", field_to_json(F)},
                         {"series", series_to_json(rep.lhs)},
                         {"meta", std::move(meta)},
                         {"verdict", rep.match ? "match" : "mismatch"}};
        if (!rep.match) out["first_mismatch"] = rep.first_mismatch;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "field: " << F.describe() << "\n"
                  << "a: " << render_polynomial(a) << "\n"
                  << "s: " << args.s_text << "\n"
                  << "precision: " << args.prec << "\n"
                  << "convention: " << args.zeta_sign << "\n"
                  << "l*: " << rep.l_star << "  i*: " << rep.i_star << "\n"
                  << "corrections:\n";
        print_corrections(std::cout, rep.corrections);
        std::cout << "lhs: " << render_series(rep.lhs) << "\n"
                  << "rhs: " << render_series(rep.rhs) << "\n";
        if (rep.match)
            std::cout << "verdict: match (all coefficients below " << rep.matched_prec
                      << " agree)\n";
        else
            std::cout << "verdict: mismatch (first differing exponent "
                      << rep.first_mismatch << ")\n";
    }
    return rep.match ? 0 : 2;
}

int cmd_eval_zeta(const CommonArgs& args, const std::string& s0_text, std::int64_t z) {
    const Fq F = parse_field_spec(args.field_spec);
    if (args.prec < 4) fail(Err::BadPrecision, "eval-zeta needs --prec >= 4");
    const LaurentSeries a = parse_poly(F, args.a_text, args.prec);
    if (a.is_zero() || a.val() >= 0)
        fail(Err::NotInA, "a must satisfy |a| > 1 (val(a) < 0)");
    const LaurentSeries s0 = parse_poly(F, s0_text, args.prec);
    const PadicInt s = parse_padic(F.p(), args.s_text, args.digits);
    if (z < 0)
        std::cerr << "note: z < 0 is outside the range reached by the difference"
                     " equation; bounds may grow\n";

    HurwitzParams params{a, z, args.prec};
    HurwitzMeta meta;
    const LaurentSeries value =
        hurwitz_goss(s0, s, params, sign_from(args.zeta_sign), args.threads, &meta);

    if (args.json) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : meta.terms)
            terms.push_back(ordered_json{{"l", t.l},
                                         {"bound", t.bound},
                                         {"val", t.valuation},
                                         {"vanishes", t.vanishes}});
        ordered_json out{{"field", field_to_json(F)},
                         {"series", series_to_json(value)},
                         {"meta", ordered_json{{"a", series_to_json(a)},
                                               {"s", args.s_text},
                                               {"s0", s0_text},
                                               {"z", z},
                                               {"prec", args.prec},
                                               {"convention", args.zeta_sign},
                                               {"l_star", meta.l_star},
                                               {"terms", std::move(terms)}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "field: " << F.describe() << "\n"
                  << "zeta(" << s0_text << ", " << args.s_text << ", "
                  << render_polynomial(a) << ", " << z << ") = " << render_series(value)
                  << "\n"
                  << "l*: " << meta.l_star << "\n";
        for (const auto& t : meta.terms) {
            std::cout << "  l=" << t.l << "  bound=" << t.bound;
            if (t.vanishes)
                std::cout << "  v_inf>=" << t.valuation << " (vanishes)";
            else
                std::cout << "  v_inf=" << t.valuation;
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_special(const std::string& field_spec, std::int64_t n, const std::string& method,
                bool json) {
    const Fq F = parse_field_spec(field_spec);
    if (n < 0) fail(Err::BadIndex, "--n must be >= 0");
    LaurentSeries value = method == "direct" ? goss_special_direct(std::uint64_t(n), F)
                                             : goss_special_recurrence(std::uint64_t(n), F);
    if (json) {
        ordered_json out{{"field", field_to_json(F)},
                         {"series", series_to_json(value)},
                         {"meta", ordered_json{{"n", n}, {"method", method}}}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << render_polynomial(value) << "\n";
    }
    return 0;
}

int cmd_power_sums(const std::string& field_spec, std::int64_t max_i, bool json) {
    const Fq F = parse_field_spec(field_spec);
    if (max_i < 0) max_i = 3 * std::int64_t(F.order() - 1);
    ordered_json sums = ordered_json::array();
    for (std::int64_t i = 0; i <= max_i; ++i) {
        FqElem v = F.power_sum(std::uint64_t(i));
        if (json)
            sums.push_back(ordered_json{{"i", i}, {"value", v}});
        else
            std::cout << "i=" << i << ": " << render_elem(F, v) << "\n";
    }
    if (json) {
        ordered_json out{{"field", field_to_json(F)}, {"meta", ordered_json{{"sums", sums}}}};
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_bounds(const CommonArgs& args, int samples, std::uint64_t seed) {
    const Fq F = parse_field_spec(args.field_spec);
    if (args.prec < 4) fail(Err::BadPrecision, "bounds needs --prec >= 4");
    const LaurentSeries a = parse_poly(F, args.a_text, args.prec);
    if (a.is_zero() || a.val() >= 0)
        fail(Err::NotInA, "a must satisfy |a| > 1 (val(a) < 0)");
    const std::int64_t m = -a.val();
    const std::int64_t N = args.prec;
    const std::uint64_t q = F.order();

    std::vector<PadicInt> exponents{parse_padic(F.p(), args.s_text, args.digits)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, F.p() - 1);
    for (int t = 0; t < samples; ++t) {
        std::vector<std::uint32_t> ds(args.digits);
        for (auto& d : ds) d = digit(rng);
        exponents.push_back(PadicInt::from_digits(F.p(), std::move(ds)));
    }

    std::int64_t l_star = 0;
    while (inner_sum_bound(q, m, l_star) < N) ++l_star;
    std::int64_t i_star = std::int64_t(q - 1);
    while ((m + 1) * i_star < N) i_star += std::int64_t(q - 1);

    bool all_hold = true;
    ordered_json l_table = ordered_json::array();
    ordered_json i_table = ordered_json::array();
    const LaurentSeries a_exact = a.padded_exact(N - m);
    for (std::int64_t l = 0; l <= l_star; ++l) {
        const std::int64_t bound = inner_sum_bound(q, m, l);
        std::int64_t worst = N;
        for (const auto& s : exponents) {
            const LaurentSeries v = inner_sum(a_exact, s, l);
            worst = std::min(worst, v.is_zero() ? v.prec() : v.val());
        }
        if (worst < bound) all_hold = false;
        l_table.push_back(ordered_json{{"l", l}, {"bound", bound}, {"min_val", worst}});
    }
    for (std::int64_t i = std::int64_t(q - 1); i <= i_star; i += std::int64_t(q - 1)) {
        const std::int64_t bound = (m + 1) * i;
        std::int64_t worst = N;
        for (const auto& s : exponents) {
            const LaurentSeries v = correction_term(a, s, i, N, sign_from(args.zeta_sign));
            worst = std::min(worst, v.is_zero() ? v.prec() : v.val());
        }
        if (worst < bound) all_hold = false;
        i_table.push_back(ordered_json{{"i", i}, {"bound", bound}, {"min_val", worst}});
    }

    if (args.json) {
        ordered_json out{{"field", field_to_json(F)},
                         {"meta", ordered_json{{"a", series_to_json(a)},
                                               {"prec", N},
                                               {"samples", samples},
                                               {"seed", seed},
                                               {"l_star", l_star},
                                               {"i_star", i_star},
                                               {"l_table", std::move(l_table)},
                                               {"i_table", std::move(i_table)}}},
                         {"verdict", all_hold ? "bounds-hold" : "bound-violated"}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "field: " << F.describe() << "  a: " << render_polynomial(a)
                  << "  m: " << m << "  N: " << N << "\n"
                  << "exponents tested: " << exponents.size() << " (--s plus " << samples
                  << " sampled, seed " << seed << ")\n"
                  << "inner sums, bound (q-1)(2m+l)(l+1)/2:\n";
        for (const auto& row : l_table)
            std::cout << "  l=" << row["l"] << "  bound=" << row["bound"]
                      << "  min v_inf=" << row["min_val"] << "\n";
        std::cout << "corrections, bound (m+1)i:\n";
        for (const auto& row : i_table)
            std::cout << "  i=" << row["i"] << "  bound=" << row["bound"]
                      << "  min v_inf=" << row["min_val"] << "\n";
        std::cout << (all_hold ? "all bounds hold\n" : "BOUND VIOLATED\n");
    }
    return all_hold ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Goss zeta arithmetic over F_q((1/T))"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string s0_text = "T^-1";
    std::int64_t z = 0;
    std::int64_t n = 0;
    std::int64_t max_i = -1;
    std::string method = "recurrence";
    int samples = 0;
    std::uint64_t seed = kDefaultSeed;

    auto add_common = [&](CLI::App* cmd, bool with_a) {
        cmd->add_option("--q", args.field_spec, "field spec p^e[:c0,c1,...] or prime power")
            ->required();
        if (with_a)
            cmd->add_option("--a", args.a_text, "polynomial in T, e.g. \"T^2+T\" or \"1,1,0\"")
                ->required();
        cmd->add_flag("--json", args.json, "machine-readable output");
    };
    auto add_exponent = [&](CLI::App* cmd) {
        cmd->add_option("--s", args.s_text, "exponent: integer or digits:d0,d1,...");
        cmd->add_option("--prec", args.prec, "target precision N");
        cmd->add_option("--digits", args.digits, "p-adic digit precision K");
        cmd->add_option("--zeta-sign", args.zeta_sign, "damping convention: proof|definition")
            ->check(CLI::IsMember({"proof", "definition"}));
        cmd->add_option("--threads", args.threads, "evaluate independent terms concurrently");
    };

    CLI::App* verify = app.add_subcommand("verify", "check the difference equation");
    add_common(verify, true);
    add_exponent(verify);

    CLI::App* eval = app.add_subcommand("eval-zeta", "evaluate the refined zeta series");
    add_common(eval, true);
    add_exponent(eval);
    eval->add_option("--z", z, "damping index z");
    eval->add_option("--s0", s0_text, "first coordinate s0 (default 1/T)");

    CLI::App* special = app.add_subcommand("special", "special value at a negative integer");
    add_common(special, false);
    special->add_option("--n", n, "evaluate at -n")->required();
    special->add_option("--method", method, "direct|recurrence")
        ->check(CLI::IsMember({"direct", "recurrence"}));

    CLI::App* bounds = app.add_subcommand("bounds", "valuation bound report");
    add_common(bounds, true);
    add_exponent(bounds);
    bounds->add_option("--samples", samples, "additional random exponents to test");
    bounds->add_option("--seed", seed, "sampling seed");

    CLI::App* psums = app.add_subcommand("power-sums", "character sums over F_q");
    add_common(psums, false);
    psums->add_option("--max-i", max_i, "largest exponent (default 3(q-1))");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(args);
        if (app.got_subcommand(eval)) return cmd_eval_zeta(args, s0_text, z);
        if (app.got_subcommand(special)) return cmd_special(args.field_spec, n, method, args.json);
        if (app.got_subcommand(bounds)) return cmd_bounds(args, samples, seed);
        if (app.got_subcommand(psums)) return cmd_power_sums(args.field_spec, max_i, args.json);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
