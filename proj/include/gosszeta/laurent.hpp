#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gosszeta/fq.hpp"

namespace gosszeta {

/// Precision-tracked element of F_q((1/T)) in the variable u := 1/T.
///
/// A series is stored as coefficients c_val .. c_{prec-1} of u^val .. u^{prec-1}
/// and is known modulo O(u^prec). Negative exponents encode positive powers
/// of T, so v_inf(a) = val() and |a| > 1 iff val() < 0. A series that is zero
/// on every tracked coefficient is stored canonically with val == prec and no
/// digits ("zero to precision prec").
///
/// Values are immutable; every operation returns a new series. All coefficient
/// arithmetic is exact in F_q; "precision" only delimits which exponents are
/// tracked.
class LaurentSeries {
public:
    /// Builds a series from coefficients of u^v .. u^{N-1} (length N - v).
    /// Leading zero coefficients are absorbed by raising val.
    static LaurentSeries make(const Fq& F, std::int64_t v,
                              const std::vector<FqElem>& coeffs, std::int64_t N);
    static LaurentSeries zero(const Fq& F, std::int64_t N);
    static LaurentSeries one(const Fq& F, std::int64_t N);
    /// c * u^exp; collapses to zero-at-N when c = 0 or exp >= N.
    static LaurentSeries monomial(const Fq& F, const FqElem& c, std::int64_t exp,
                                  std::int64_t N);
    static LaurentSeries constant(const Fq& F, const FqElem& c, std::int64_t N);
    /// T^k = u^{-k}.
    static LaurentSeries t_power(const Fq& F, std::int64_t k, std::int64_t N);
    /// Polynomial in T from coefficients of T^m .. T^0 (high to low).
    static LaurentSeries from_t_coeffs(const Fq& F, const std::vector<FqElem>& high_to_low,
                                       std::int64_t N);

    const Fq& field() const noexcept { return field_; }
    std::int64_t val() const noexcept { return val_; }
    std::int64_t prec() const noexcept { return prec_; }
    bool is_zero() const noexcept { return zero_; }

    /// Coefficient of u^j for j < prec (zero below val). Asks for an
    /// untracked exponent -> BadPrecision.
    FqElem coeff(std::int64_t j) const;

    friend LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y);
    friend LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y);
    friend LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y);
    LaurentSeries operator-() const;

    /// Multiplicative inverse; val flips sign and the precision contracts to
    /// prec - 2*val so that x * inverse(x) = 1 + O(u^{prec - val}).
    LaurentSeries inverse() const;

    /// Multiply by a prime-subfield scalar b (reduced mod p).
    LaurentSeries scalar_mul(std::uint32_t b) const;
    /// Multiply every coefficient by a fixed field element.
    LaurentSeries coeff_mul(const FqElem& c) const;
    /// Multiply by the exact monomial u^du (shifts val and prec).
    LaurentSeries shifted(std::int64_t du) const;
    /// Drop coefficients at exponents >= N (requires N <= prec to change
    /// anything; never raises precision).
    LaurentSeries truncated(std::int64_t N) const;
    /// Raise precision to N, treating the series as exact data (absent
    /// coefficients are zero). No-op when N <= prec.
    LaurentSeries padded_exact(std::int64_t N) const;
    /// n-fold product (inverse first for n < 0); x^0 = 1.
    LaurentSeries int_pow(std::int64_t n) const;

    /// Structural equality: same field, val, prec and digits.
    bool operator==(const LaurentSeries& other) const;
    bool operator!=(const LaurentSeries& other) const { return !(*this == other); }

private:
    LaurentSeries(Fq F, std::int64_t v, std::int64_t N, bool zero,
                  std::vector<std::uint32_t> digits)
        : field_(std::move(F)), val_(v), prec_(N), zero_(zero), digits_(std::move(digits)) {}

    static LaurentSeries normalized(const Fq& F, std::int64_t v, std::int64_t N,
                                    std::vector<std::uint32_t> digits);

    const std::uint32_t* slot(std::int64_t j) const {
        return digits_.data() + std::size_t(j - val_) * field_.ext_degree();
    }

    Fq field_;
    std::int64_t val_;  // lowest tracked exponent; == prec_ for the zero series
    std::int64_t prec_; // known modulo O(u^prec)
    bool zero_;
    std::vector<std::uint32_t> digits_; // (prec-val)*e packed residues

    friend class SeriesBuilder;
};

/// (sgn, v_inf) = (leading coefficient, val) of a nonzero series.
std::pair<FqElem, std::int64_t> sgn_and_val(const LaurentSeries& a);

/// The 1-unit part <a> = sgn^{-1} u^{-v_inf} a, val 0 and constant term 1,
/// carried at precision prec(a) - val(a).
LaurentSeries one_unit_part(const LaurentSeries& a);

/// The monomial part a / <a> = sgn * T^{-v_inf}, carried at precision prec(a).
LaurentSeries omega_part(const LaurentSeries& a);

/// True iff x and y agree on every coefficient below min(prec x, prec y).
/// When they do not, *first_mismatch (if given) receives the smallest
/// differing exponent.
bool coefficients_match(const LaurentSeries& x, const LaurentSeries& y,
                        std::int64_t* first_mismatch = nullptr);

/// x^k for exact data x (coefficients beyond prec treated as zero), padded
/// internally so every coefficient below out_prec is tracked.
LaurentSeries exact_int_pow(const LaurentSeries& x, std::int64_t k, std::int64_t out_prec);

/// Mutable dense accumulator for hot loops: fixed window [lo, hi) of u-
/// exponents, exact adds, one normalization at the end.
class SeriesBuilder {
public:
    SeriesBuilder(const Fq& F, std::int64_t lo, std::int64_t hi);
    void add(const LaurentSeries& x);                 // += x (below hi)
    void add_scaled(const LaurentSeries& x, std::uint32_t b);
    LaurentSeries take(std::int64_t prec);            // normalize into a series
private:
    Fq field_;
    std::int64_t lo_, hi_;
    std::vector<std::uint32_t> digits_;
};

} // namespace gosszeta
