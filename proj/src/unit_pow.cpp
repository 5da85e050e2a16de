#include "gosszeta/unit_pow.hpp"

namespace gosszeta {

namespace {

void check_one_unit(const LaurentSeries& g) {
    if (g.is_zero() || g.val() != 0 || !g.field().is_one(g.coeff(0)))
        fail(Err::NotOneUnit, "exponent base must be 1 + O(u)");
}

void check_exponent_prime(const LaurentSeries& g, const PadicInt& s) {
    if (s.p() != g.field().p())
        fail(Err::FieldMismatch, "exponent prime differs from field characteristic");
}

LaurentSeries lambda_part(const LaurentSeries& g) {
    return g - LaurentSeries::one(g.field(), g.prec());
}

} // namespace

SPoint::SPoint(LaurentSeries s0_, PadicInt s_) : s0(std::move(s0_)), s(std::move(s_)) {
    if (s0.is_zero()) fail(Err::ZeroInput, "s0 must be a nonzero series");
    if (s.p() != s0.field().p())
        fail(Err::FieldMismatch, "S-point prime differs from field characteristic");
}

LaurentSeries unit_pow_binomial(const LaurentSeries& g, const PadicInt& s) {
    check_one_unit(g);
    check_exponent_prime(g, s);
    const Fq& F = g.field();
    const std::int64_t P = g.prec();

    const LaurentSeries lam = lambda_part(g);
    SeriesBuilder acc(F, 0, P);
    acc.add(LaurentSeries::one(F, P));
    if (lam.is_zero()) return acc.take(P);

    LaurentSeries lampow = lam;
    for (std::uint64_t j = 1; !lampow.is_zero(); ++j) {
        acc.add_scaled(lampow, binom_mod_p(s, j));
        lampow = (lampow * lam).truncated(P);
    }
    return acc.take(P);
}

LaurentSeries unit_pow_digits(const LaurentSeries& g, const PadicInt& s) {
    check_one_unit(g);
    check_exponent_prime(g, s);
    const Fq& F = g.field();
    const std::uint32_t p = F.p();
    const std::int64_t P = g.prec();

    LaurentSeries omega = lambda_part(g);
    LaurentSeries acc = LaurentSeries::one(F, P);
    for (std::size_t j = 0; j < s.digit_count() && !omega.is_zero(); ++j) {
        const std::uint32_t c = s.digit(j);
        if (c != 0) {
            const LaurentSeries factor = LaurentSeries::one(F, P) + omega;
            for (std::uint32_t t = 0; t < c; ++t) acc = (acc * factor).truncated(P);
        }
        // omega <- omega^p, so that 1 + omega becomes g^{p^{j+1}}
        LaurentSeries next = omega;
        for (std::uint32_t t = 1; t < p; ++t) next = (next * omega).truncated(P);
        omega = next;
    }
    return acc;
}

LaurentSeries bracket_pow(const LaurentSeries& a, const PadicInt& s) {
    if (a.is_zero()) fail(Err::ZeroInput, "bracket of a zero series");
    return unit_pow_binomial(one_unit_part(a), s);
}

LaurentSeries point_pow(const LaurentSeries& a, const SPoint& w) {
    if (!(a.field() == w.s0.field()))
        fail(Err::FieldMismatch, "base and s0 live in different fields");
    if (a.is_zero() || a.val() > 0 || !a.field().is_one(a.coeff(a.val())))
        fail(Err::NotMonic, "base must be a monic polynomial in T");
    for (std::int64_t j = 1; j < a.prec(); ++j)
        if (!a.field().is_zero(a.coeff(j)))
            fail(Err::NotMonic, "base has terms below T^0");
    const std::int64_t deg = -a.val();
    return w.s0.int_pow(deg) * bracket_pow(a, w.s);
}

} // namespace gosszeta
