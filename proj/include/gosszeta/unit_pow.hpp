#pragma once

#include "gosszeta/laurent.hpp"
#include "gosszeta/padic.hpp"

namespace gosszeta {

/// A point w = (s0, s) of the plane S = k_inf^* x Z_p on which a^w is
/// defined. The prime of s must be the characteristic of s0's field.
struct SPoint {
    LaurentSeries s0;
    PadicInt s;

    SPoint(LaurentSeries s0_, PadicInt s_);
};

/// g^s for a 1-unit g = 1 + lambda via the binomial series
/// sum_j (s choose j) lambda^j, truncated at the least J with
/// J*val(lambda) >= prec(g). The result is a 1-unit at precision prec(g).
LaurentSeries unit_pow_binomial(const LaurentSeries& g, const PadicInt& s);

/// g^s via the digit product prod_j (1 + omega^{p^j})^{c_j} where
/// g = 1 + omega and c_j are the digits of s. Independent of the binomial
/// route; the two must agree coefficientwise.
LaurentSeries unit_pow_digits(const LaurentSeries& g, const PadicInt& s);

/// <a>^s for nonzero a. Negative exponents go through complement digits,
/// never through series inversion.
LaurentSeries bracket_pow(const LaurentSeries& a, const PadicInt& s);

/// a^w = s0^{deg a} * <a>^s for a monic polynomial a in T.
LaurentSeries point_pow(const LaurentSeries& a, const SPoint& w);

} // namespace gosszeta
