#pragma once

#include <cstdint>
#include <vector>

#include "gosszeta/unit_pow.hpp"

namespace gosszeta {

/// Sign convention for the degree-indexed damping factor s0^(+-(m+l+1)z).
/// `proof` uses the exponent +(m+l+1)z (the form the difference-equation
/// verification requires at s0 = 1/T); `definition` uses -(m+l+1)z.
enum class ZetaSign { proof, definition };

/// Parameters of the refined zeta series: a with |a| > 1 (val(a) < 0),
/// the damping index z, and the target precision.
struct HurwitzParams {
    LaurentSeries a;
    std::int64_t z = 0;
    std::int64_t prec = 16;

    std::int64_t m() const { return -a.val(); } // derived; >= 1 inside the domain
};

/// Valuation lower bound (q-1)(2m+l)(l+1)/2 for the degree-l inner sum.
std::int64_t inner_sum_bound(std::uint64_t q, std::int64_t m, std::int64_t l);

/// Exponent sigma*(m+l+1)*z carried by the damping factor at degree l.
std::int64_t damping_exponent(ZetaSign sign, std::int64_t m, std::int64_t l, std::int64_t z);

/// Power sums P_j = sum_k lambda_k^j over the translate family
/// { <k+a> = 1 + lambda_k : k in F_q[1/T], deg(k) <= l }, tracked below
/// `unit_prec`. Built once per (a, l), then any exponent t is a cheap
/// binomial contraction. `a` is treated as exact data.
class InnerSumTable {
public:
    InnerSumTable(const LaurentSeries& a, std::int64_t l, std::int64_t unit_prec);

    /// sum_k <k+a>^t = sum_j (t choose j) P_j, a series at precision unit_prec.
    LaurentSeries sum_pow(const PadicInt& t) const;

    std::int64_t l() const noexcept { return l_; }
    std::int64_t unit_prec() const noexcept { return prec_; }

private:
    Fq field_;
    std::int64_t l_;
    std::int64_t prec_;
    std::vector<LaurentSeries> power_sums_; // index j >= 1; P_0 = 0 in char p
};

/// sum over the q^(l+1) polynomials k with deg_inf(k) <= l of 1/<k+a>^s,
/// at the precision carried by a.
LaurentSeries inner_sum(const LaurentSeries& a, const PadicInt& s, std::int64_t l);

/// Per-degree truncation data reported by the evaluator.
struct HurwitzMeta {
    std::int64_t l_star = 0;
    struct Term {
        std::int64_t l;
        std::int64_t bound;     // valuation lower bound of the damped term
        std::int64_t valuation; // observed v_inf (== prec when vanishes)
        bool vanishes;
    };
    std::vector<Term> terms;
};

/// The refined zeta value sum_l s0^(sigma (m+l+1) z) * inner_sum(a, s, l),
/// summed for l = 0..l* where l* is the least degree whose valuation bound
/// reaches params.prec. Treats a and s0 as exact data and returns a series
/// carrying exactly params.prec. threads > 1 evaluates the independent
/// degree terms concurrently; the combination order is fixed.
LaurentSeries hurwitz_goss(const LaurentSeries& s0, const PadicInt& s,
                           const HurwitzParams& params, ZetaSign sign = ZetaSign::proof,
                           int threads = 1, HurwitzMeta* meta = nullptr);

/// Partial Goss zeta sum_{l<=l_max} s0^{-l} sum_{a monic, deg a = l} <a>^{-s}.
LaurentSeries goss_partial(const SPoint& w, std::int64_t l_max);

/// Special value at -n as an exact polynomial in T, by enumerating monic
/// polynomials: sum_{l <= n/(q-1)} sum_{a monic, deg a = l} a^n. Degrees
/// beyond n/(q-1) cancel identically and are not summed.
LaurentSeries goss_special_direct(std::uint64_t n, const Fq& F);

/// Special value at -n through the recurrence
/// z(-n) = 1 - sum_{i<n, (q-1)|(n-i)} (n choose i) T^i z(-i).
LaurentSeries goss_special_recurrence(std::uint64_t n, const Fq& F);

} // namespace gosszeta
