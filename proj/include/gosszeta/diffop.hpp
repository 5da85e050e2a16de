#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gosszeta/zeta.hpp"

namespace gosszeta {

/// A two-parameter family (s, z) -> series, the shape the difference
/// operator acts on.
using ZetaFamily = std::function<LaurentSeries(const PadicInt& s, std::int64_t z)>;

/// Forward difference f(s+1, z+1) - f(s, z).
LaurentSeries forward_difference(const ZetaFamily& f, const PadicInt& s, std::int64_t z);

/// h-fold application of the forward difference.
LaurentSeries iterated_difference(const ZetaFamily& f, const PadicInt& s, std::int64_t z,
                                  std::int64_t h);

/// f(s+i, z+i) by direct evaluation.
LaurentSeries shift_eval(const ZetaFamily& f, const PadicInt& s, std::int64_t z,
                         std::int64_t i);

/// The same shift through the expansion sum_h (i choose h) D^h f(s, z)
/// (coefficients reduced mod p); must agree with shift_eval.
LaurentSeries shift_eval_expanded(const ZetaFamily& f, const PadicInt& s, std::int64_t z,
                                  std::int64_t i);

/// The i-th correction (-s choose i) * sum_l T^{-(m+l+1)i} inner_sum(a, s+i, l)
/// under the proof convention (the definition convention flips the damping
/// exponent). Requires (q-1) | i, i >= 1. Tracked below `prec`.
LaurentSeries correction_term(const LaurentSeries& a, const PadicInt& s, std::int64_t i,
                              std::int64_t prec, ZetaSign sign = ZetaSign::proof);

struct OperatorOptions {
    int extra_l_steps = 0; ///< widen every degree cutoff by this many steps
    int extra_i_steps = 0; ///< extend the correction sum by whole (q-1)-steps
    int threads = 1;
    ZetaSign sign = ZetaSign::proof;
};

/// Per-correction diagnostics of an operator run.
struct CorrectionInfo {
    std::int64_t i;
    std::uint32_t binom;    ///< (-s choose i) mod p
    std::int64_t bound;     ///< tail bound (m+1)*i
    std::int64_t valuation; ///< observed v_inf (== prec when the term vanishes)
    bool vanishes;
};

struct OperatorRun {
    LaurentSeries result;
    std::int64_t l_star;
    std::int64_t i_star;
    std::vector<CorrectionInfo> corrections;
};

/// Applies the infinite-order difference operator
///   id + sum_{i >= 1, (q-1)|i} (-s choose i) (1 + D)^i
/// to the refined zeta family at (s, z = 0): the identity term plus the
/// corrections for i = (q-1), 2(q-1), ..., i*, where i* is the least
/// multiple of (q-1) with (m+1) i* >= prec. The shifted evaluations realize
/// the (1 + D)^i powers. `a` is treated as exact data.
OperatorRun run_difference_operator(const LaurentSeries& a, const PadicInt& s,
                                    std::int64_t prec, const OperatorOptions& opts = {});

/// run_difference_operator, result only.
LaurentSeries apply_difference_operator(const LaurentSeries& a, const PadicInt& s,
                                        std::int64_t prec, const OperatorOptions& opts = {});

/// sum over alpha in F_q of 1/<a+alpha>^s, at the precision carried by a.
LaurentSeries neighbor_sum(const LaurentSeries& a, const PadicInt& s);

/// Coefficient-by-coefficient comparison of the operator image against the
/// neighbor sum at matched precision.
struct VerificationReport {
    LaurentSeries lhs;
    LaurentSeries rhs;
    std::int64_t matched_prec;
    std::int64_t l_star;
    std::int64_t i_star;
    std::vector<CorrectionInfo> corrections;
    bool match;
    std::int64_t first_mismatch; ///< smallest differing exponent when !match
};

VerificationReport verify_difference_equation(const LaurentSeries& a, const PadicInt& s,
                                              std::int64_t prec,
                                              const OperatorOptions& opts = {});

} // namespace gosszeta
