#include "gosszeta/diffop.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <string>
#include <utility>

namespace gosszeta {

namespace {

void check_in_domain(const LaurentSeries& a) {
    if (a.is_zero() || a.val() >= 0)
        fail(Err::NotInA, "need |a| > 1, i.e. val(a) < 0");
}

std::int64_t correction_shift(ZetaSign sign, std::int64_t m, std::int64_t l, std::int64_t i) {
    // valuation shift of the damping factor T^{-(m+l+1)i} (proof) at degree l
    const std::int64_t d = (m + l + 1) * i;
    return sign == ZetaSign::proof ? d : -d;
}

// degrees l = 0.. while the damped valuation bound stays below prec
std::vector<std::int64_t> correction_degrees(std::uint64_t q, std::int64_t m, std::int64_t i,
                                             std::int64_t prec, ZetaSign sign,
                                             int extra_l_steps) {
    std::vector<std::int64_t> ls;
    std::int64_t l = 0;
    while (inner_sum_bound(q, m, l) + correction_shift(sign, m, l, i) < prec) {
        ls.push_back(l);
        if (l++ > kMaxInnerDegree)
            fail(Err::NoConvergence, "damped bound stays below target up to l = " +
                                         std::to_string(kMaxInnerDegree));
    }
    for (int t = 0; t < extra_l_steps; ++t) ls.push_back(l++);
    return ls;
}

} // namespace

LaurentSeries forward_difference(const ZetaFamily& f, const PadicInt& s, std::int64_t z) {
    return f(s.add_int(1), z + 1) - f(s, z);
}

LaurentSeries iterated_difference(const ZetaFamily& f, const PadicInt& s, std::int64_t z,
                                  std::int64_t h) {
    if (h < 0) fail(Err::BadIndex, "difference order must be >= 0");
    if (h == 0) return f(s, z);
    return iterated_difference(f, s.add_int(1), z + 1, h - 1) -
           iterated_difference(f, s, z, h - 1);
}

LaurentSeries shift_eval(const ZetaFamily& f, const PadicInt& s, std::int64_t z,
                         std::int64_t i) {
    if (i < 0 || i > kMaxShiftSteps) fail(Err::BadIndex, "shift index out of range");
    return f(s.add_int(std::uint64_t(i)), z + i);
}

LaurentSeries shift_eval_expanded(const ZetaFamily& f, const PadicInt& s, std::int64_t z,
                                  std::int64_t i) {
    if (i < 0 || i > kMaxShiftSteps) fail(Err::BadIndex, "shift index out of range");
    const PadicInt ip = PadicInt::from_int(i, s.p());
    LaurentSeries acc = f(s, z); // h = 0
    for (std::int64_t h = 1; h <= i; ++h) {
        const std::uint32_t b = binom_mod_p(ip, std::uint64_t(h));
        if (b == 0) continue;
        acc = acc + iterated_difference(f, s, z, h).scalar_mul(b);
    }
    return acc;
}

LaurentSeries correction_term(const LaurentSeries& a, const PadicInt& s, std::int64_t i,
                              std::int64_t prec, ZetaSign sign) {
    check_in_domain(a);
    const Fq& F = a.field();
    const std::uint64_t q = F.order();
    if (i < 1 || std::uint64_t(i) % (q - 1) != 0)
        fail(Err::BadIndex, "correction index must be a positive multiple of q-1");
    if (prec < 1) fail(Err::BadPrecision, "target precision must be >= 1");

    const std::uint32_t b = binom_mod_p(s.neg(), std::uint64_t(i));
    if (b == 0) return LaurentSeries::zero(F, prec);

    const std::int64_t m = -a.val();
    const PadicInt t = s.add_int(std::uint64_t(i)).neg();
    const std::vector<std::int64_t> degrees = correction_degrees(q, m, i, prec, sign, 0);

    std::int64_t lo = 0;
    for (std::int64_t l : degrees) lo = std::min(lo, correction_shift(sign, m, l, i) + 1);
    SeriesBuilder acc(F, lo, prec);
    for (std::int64_t l : degrees) {
        const std::int64_t shift = correction_shift(sign, m, l, i);
        InnerSumTable table(a, l, std::max<std::int64_t>(1, prec - shift));
        acc.add(table.sum_pow(t).shifted(shift));
    }
    return acc.take(prec).scalar_mul(b);
}

OperatorRun run_difference_operator(const LaurentSeries& a, const PadicInt& s,
                                    std::int64_t prec, const OperatorOptions& opts) {
    check_in_domain(a);
    const Fq& F = a.field();
    if (s.p() != F.p())
        fail(Err::FieldMismatch, "exponent prime differs from field characteristic");
    if (prec < 1) fail(Err::BadPrecision, "target precision must be >= 1");

    const std::uint64_t q = F.order();
    const std::int64_t m = -a.val();
    const std::int64_t step = std::int64_t(q - 1);

    // least multiple of q-1 whose tail bound (m+1)i reaches prec
    std::int64_t i_star = step;
    while ((m + 1) * i_star < prec) i_star += step;
    i_star += step * opts.extra_i_steps;
    if (digits_needed(std::uint64_t(i_star), F.p()) > s.digit_count())
        fail(Err::InsufficientDigitPrecision,
             "digit precision does not cover i* = " + std::to_string(i_star));

    // identity-term degrees: l = 0..l* with l* the least degree whose bound
    // reaches prec (the z = 0 damping factor is 1)
    std::int64_t l_star = 0;
    while (inner_sum_bound(q, m, l_star) < prec) {
        if (l_star++ > kMaxInnerDegree)
            fail(Err::NoConvergence, "identity-term bound stays below target");
    }
    const std::int64_t l_base_top = l_star + opts.extra_l_steps;

    const PadicInt neg_s = s.neg();
    struct Correction {
        std::int64_t i;
        std::uint32_t binom;
        std::vector<std::int64_t> degrees;
        PadicInt exponent; // -(s+i)
    };
    std::vector<Correction> corrections;
    for (std::int64_t i = step; i <= i_star; i += step) {
        const std::uint32_t b = binom_mod_p(neg_s, std::uint64_t(i));
        std::vector<std::int64_t> degrees;
        if (b != 0)
            degrees = correction_degrees(q, m, i, prec, opts.sign, opts.extra_l_steps);
        corrections.push_back(
            {i, b, std::move(degrees), s.add_int(std::uint64_t(i)).neg()});
    }

    // every (l, unit_prec) pair used, built once and shared
    std::map<std::pair<std::int64_t, std::int64_t>, InnerSumTable> tables;
    std::vector<std::pair<std::int64_t, std::int64_t>> keys;
    auto want = [&](std::int64_t l, std::int64_t unit_prec) {
        const auto key = std::make_pair(l, unit_prec);
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    };
    // proof-sign corrections share the identity-term tables (shift > 0);
    // definition-sign ones need the deeper precision prec - shift
    for (std::int64_t l = 0; l <= l_base_top; ++l) want(l, prec);
    for (const auto& c : corrections)
        for (std::int64_t l : c.degrees)
            want(l, std::max(prec, prec - correction_shift(opts.sign, m, l, c.i)));

    if (opts.threads > 1) {
        std::vector<std::future<InnerSumTable>> futs;
        for (const auto& key : keys)
            futs.push_back(std::async(std::launch::async, [&a, key] {
                return InnerSumTable(a, key.first, key.second);
            }));
        for (std::size_t t = 0; t < keys.size(); ++t)
            tables.emplace(keys[t], futs[t].get());
    } else {
        for (const auto& key : keys)
            tables.emplace(key, InnerSumTable(a, key.first, key.second));
    }

    std::int64_t lo = 0;
    for (const auto& c : corrections)
        for (std::int64_t l : c.degrees)
            lo = std::min(lo, correction_shift(opts.sign, m, l, c.i) + 1);
    SeriesBuilder total(F, lo, prec);

    for (std::int64_t l = 0; l <= l_base_top; ++l)
        total.add(tables.at({l, prec}).sum_pow(neg_s));

    OperatorRun run{LaurentSeries::zero(F, prec), l_star, i_star, {}};
    for (const auto& c : corrections) {
        if (c.binom == 0) {
            run.corrections.push_back({c.i, 0, (m + 1) * c.i, prec, true});
            continue;
        }
        SeriesBuilder acc(F, lo, prec);
        for (std::int64_t l : c.degrees) {
            const std::int64_t shift = correction_shift(opts.sign, m, l, c.i);
            const auto& table = tables.at({l, std::max(prec, prec - shift)});
            acc.add(table.sum_pow(c.exponent).shifted(shift));
        }
        const LaurentSeries term = acc.take(prec).scalar_mul(c.binom);
        run.corrections.push_back({c.i, c.binom, (m + 1) * c.i,
                                   term.is_zero() ? term.prec() : term.val(),
                                   term.is_zero()});
        total.add(term);
    }
    run.result = total.take(prec);
    return run;
}

LaurentSeries apply_difference_operator(const LaurentSeries& a, const PadicInt& s,
                                        std::int64_t prec, const OperatorOptions& opts) {
    return run_difference_operator(a, s, prec, opts).result;
}

LaurentSeries neighbor_sum(const LaurentSeries& a, const PadicInt& s) {
    check_in_domain(a);
    const Fq& F = a.field();
    const PadicInt t = s.neg();
    SeriesBuilder acc(F, 0, a.prec() - a.val());
    for (const FqElem& alpha : F.enumerate()) {
        const LaurentSeries shifted = a + LaurentSeries::constant(F, alpha, a.prec());
        acc.add(bracket_pow(shifted, t));
    }
    return acc.take(a.prec() - a.val());
}

VerificationReport verify_difference_equation(const LaurentSeries& a, const PadicInt& s,
                                              std::int64_t prec,
                                              const OperatorOptions& opts) {
    OperatorRun run = run_difference_operator(a, s, prec, opts);
    const std::int64_t m = -a.val();
    const LaurentSeries rhs =
        neighbor_sum(a.padded_exact(prec - m), s).truncated(prec);

    VerificationReport report{run.result,
                              rhs,
                              std::min(run.result.prec(), rhs.prec()),
                              run.l_star,
                              run.i_star,
                              std::move(run.corrections),
                              false,
                              0};
    report.match = coefficients_match(report.lhs, report.rhs, &report.first_mismatch);
    return report;
}

} // namespace gosszeta
