#include "gosszeta/laurent.hpp"

#include <algorithm>

namespace gosszeta {

namespace {

void check_same_field(const LaurentSeries& x, const LaurentSeries& y) {
    if (!(x.field() == y.field()))
        fail(Err::FieldMismatch, "operands live in different fields");
}

} // namespace

LaurentSeries LaurentSeries::normalized(const Fq& F, std::int64_t v, std::int64_t N,
                                        std::vector<std::uint32_t> digits) {
    const std::uint32_t e = F.ext_degree();
    const std::int64_t len = std::int64_t(digits.size()) / e;
    std::int64_t k = 0;
    while (k < len && F.raw_is_zero(digits.data() + std::size_t(k) * e)) ++k;
    if (k == len || v + k >= N) return LaurentSeries(F, N, N, true, {});
    if (k > 0) digits.erase(digits.begin(), digits.begin() + std::int64_t(k) * e);
    // drop anything at or beyond N
    std::int64_t keep = N - (v + k);
    digits.resize(std::size_t(keep) * e, 0);
    return LaurentSeries(F, v + k, N, false, std::move(digits));
}

LaurentSeries LaurentSeries::make(const Fq& F, std::int64_t v,
                                  const std::vector<FqElem>& coeffs, std::int64_t N) {
    if (v >= N) fail(Err::BadPrecision, "val must be below prec");
    if (std::int64_t(coeffs.size()) != N - v)
        fail(Err::BadPrecision, "need exactly prec - val coefficients");
    const std::uint32_t e = F.ext_degree();
    std::vector<std::uint32_t> digits;
    digits.reserve(coeffs.size() * e);
    for (const auto& c : coeffs) {
        FqElem r = F.element(c); // validates + reduces
        digits.insert(digits.end(), r.begin(), r.end());
    }
    return normalized(F, v, N, std::move(digits));
}

LaurentSeries LaurentSeries::zero(const Fq& F, std::int64_t N) {
    return LaurentSeries(F, N, N, true, {});
}

LaurentSeries LaurentSeries::one(const Fq& F, std::int64_t N) {
    return monomial(F, F.one(), 0, N);
}

LaurentSeries LaurentSeries::monomial(const Fq& F, const FqElem& c, std::int64_t exp,
                                      std::int64_t N) {
    FqElem r = F.element(c);
    if (F.is_zero(r) || exp >= N) return zero(F, N);
    std::vector<std::uint32_t> digits(std::size_t(N - exp) * F.ext_degree(), 0);
    std::copy(r.begin(), r.end(), digits.begin());
    return LaurentSeries(F, exp, N, false, std::move(digits));
}

LaurentSeries LaurentSeries::constant(const Fq& F, const FqElem& c, std::int64_t N) {
    return monomial(F, c, 0, N);
}

LaurentSeries LaurentSeries::t_power(const Fq& F, std::int64_t k, std::int64_t N) {
    return monomial(F, F.one(), -k, N);
}

LaurentSeries LaurentSeries::from_t_coeffs(const Fq& F,
                                           const std::vector<FqElem>& high_to_low,
                                           std::int64_t N) {
    if (high_to_low.empty()) return zero(F, N);
    std::int64_t m = std::int64_t(high_to_low.size()) - 1; // T-degree of the leading slot
    std::vector<FqElem> coeffs = high_to_low;              // u^{-m} .. u^0
    for (std::int64_t j = 1; j < N; ++j) coeffs.push_back(F.zero());
    if (N <= 0) coeffs.resize(std::size_t(N + m), F.zero()); // keep exactly N - (-m)
    return make(F, -m, coeffs, N);
}

FqElem LaurentSeries::coeff(std::int64_t j) const {
    if (j >= prec_) fail(Err::BadPrecision, "coefficient beyond tracked precision");
    if (zero_ || j < val_) return field_.zero();
    const std::uint32_t* s = slot(j);
    return FqElem(s, s + field_.ext_degree());
}

LaurentSeries operator+(const LaurentSeries& x, const LaurentSeries& y) {
    check_same_field(x, y);
    const Fq& F = x.field();
    const std::uint32_t e = F.ext_degree();
    const std::int64_t P = std::min(x.prec_, y.prec_);
    std::int64_t lo = P;
    if (!x.zero_) lo = std::min(lo, x.val_);
    if (!y.zero_) lo = std::min(lo, y.val_);
    if (lo >= P) return LaurentSeries::zero(F, P);
    std::vector<std::uint32_t> digits(std::size_t(P - lo) * e, 0);
    auto accumulate = [&](const LaurentSeries& s) {
        if (s.zero_) return;
        const std::int64_t hi = std::min(s.prec_, P);
        for (std::int64_t j = s.val_; j < hi; ++j)
            F.raw_add(digits.data() + std::size_t(j - lo) * e, s.slot(j),
                      digits.data() + std::size_t(j - lo) * e);
    };
    accumulate(x);
    accumulate(y);
    return LaurentSeries::normalized(F, lo, P, std::move(digits));
}

LaurentSeries LaurentSeries::operator-() const {
    if (zero_) return *this;
    std::vector<std::uint32_t> digits(digits_.size());
    const std::uint32_t e = field_.ext_degree();
    for (std::size_t k = 0; k < digits_.size(); k += e)
        field_.raw_neg(digits_.data() + k, digits.data() + k);
    return LaurentSeries(field_, val_, prec_, false, std::move(digits));
}

LaurentSeries operator-(const LaurentSeries& x, const LaurentSeries& y) {
    return x + (-y);
}

LaurentSeries operator*(const LaurentSeries& x, const LaurentSeries& y) {
    check_same_field(x, y);
    const Fq& F = x.field();
    const std::uint32_t e = F.ext_degree();
    const std::int64_t P = std::min(x.prec_ + y.val_, y.prec_ + x.val_);
    if (x.zero_ || y.zero_) return LaurentSeries::zero(F, P);
    const std::int64_t v = x.val_ + y.val_;
    if (v >= P) return LaurentSeries::zero(F, P);
    const std::int64_t len = P - v;
    const std::int64_t lx = x.prec_ - x.val_;
    const std::int64_t ly = y.prec_ - y.val_;
    std::vector<std::uint32_t> digits(std::size_t(len) * e, 0);
    for (std::int64_t i = 0; i < lx && i < len; ++i) {
        const std::uint32_t* xi = x.digits_.data() + std::size_t(i) * e;
        if (F.raw_is_zero(xi)) continue;
        const std::int64_t jmax = std::min(ly, len - i);
        for (std::int64_t j = 0; j < jmax; ++j) {
            const std::uint32_t* yj = y.digits_.data() + std::size_t(j) * e;
            if (F.raw_is_zero(yj)) continue;
            F.raw_mul_add(xi, yj, digits.data() + std::size_t(i + j) * e);
        }
    }
    return LaurentSeries::normalized(F, v, P, std::move(digits));
}

LaurentSeries LaurentSeries::inverse() const {
    if (zero_) fail(Err::DivisionByZero, "inverse of a zero series");
    const std::uint32_t e = field_.ext_degree();
    const std::int64_t L = prec_ - val_;
    FqElem lead(digits_.begin(), digits_.begin() + e);
    FqElem lead_inv = field_.inv(lead);
    std::vector<std::uint32_t> out(std::size_t(L) * e, 0);
    std::copy(lead_inv.begin(), lead_inv.end(), out.begin());
    std::vector<std::uint32_t> acc(e), tmp(e);
    for (std::int64_t k = 1; k < L; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::int64_t j = 1; j <= k; ++j) {
            const std::uint32_t* rj = digits_.data() + std::size_t(j) * e;
            if (field_.raw_is_zero(rj)) continue;
            field_.raw_mul_add(rj, out.data() + std::size_t(k - j) * e, acc.data());
        }
        field_.raw_neg(acc.data(), tmp.data());
        field_.raw_mul(tmp.data(), lead_inv.data(), out.data() + std::size_t(k) * e);
    }
    return LaurentSeries(field_, -val_, prec_ - 2 * val_, false, std::move(out));
}

LaurentSeries LaurentSeries::scalar_mul(std::uint32_t b) const {
    b %= field_.p();
    if (zero_ || b == 0) return zero(field_, prec_);
    if (b == 1) return *this;
    std::vector<std::uint32_t> digits(digits_.size());
    const std::uint32_t e = field_.ext_degree();
    for (std::size_t k = 0; k < digits_.size(); k += e)
        field_.raw_scalar_mul(digits_.data() + k, b, digits.data() + k);
    return LaurentSeries(field_, val_, prec_, false, std::move(digits));
}

LaurentSeries LaurentSeries::coeff_mul(const FqElem& c) const {
    FqElem r = field_.element(c);
    if (zero_ || field_.is_zero(r)) return zero(field_, prec_);
    std::vector<std::uint32_t> digits(digits_.size());
    const std::uint32_t e = field_.ext_degree();
    for (std::size_t k = 0; k < digits_.size(); k += e)
        field_.raw_mul(digits_.data() + k, r.data(), digits.data() + k);
    return LaurentSeries(field_, val_, prec_, false, std::move(digits));
}

LaurentSeries LaurentSeries::shifted(std::int64_t du) const {
    return LaurentSeries(field_, val_ + du, prec_ + du, zero_, digits_);
}

LaurentSeries LaurentSeries::truncated(std::int64_t N) const {
    if (N >= prec_) return *this;
    if (zero_ || val_ >= N) return zero(field_, N);
    std::vector<std::uint32_t> digits(digits_.begin(),
                                      digits_.begin() +
                                          std::int64_t(std::size_t(N - val_) * field_.ext_degree()));
    return LaurentSeries(field_, val_, N, false, std::move(digits));
}

LaurentSeries LaurentSeries::padded_exact(std::int64_t N) const {
    if (N <= prec_) return *this;
    if (zero_) return zero(field_, N);
    std::vector<std::uint32_t> digits = digits_;
    digits.resize(std::size_t(N - val_) * field_.ext_degree(), 0);
    return LaurentSeries(field_, val_, N, false, std::move(digits));
}

LaurentSeries LaurentSeries::int_pow(std::int64_t n) const {
    if (n == 0) return one(field_, std::max<std::int64_t>(1, prec_ - val_));
    LaurentSeries base = n < 0 ? inverse() : *this;
    std::int64_t k = n < 0 ? -n : n;
    // square-and-multiply; the precision contraction is the same as for the
    // k-fold sequential product
    LaurentSeries acc = base;
    std::int64_t msb = 62;
    while (((k >> msb) & 1) == 0) --msb;
    for (std::int64_t b = msb - 1; b >= 0; --b) {
        acc = acc * acc;
        if ((k >> b) & 1) acc = acc * base;
    }
    return acc;
}

LaurentSeries exact_int_pow(const LaurentSeries& x, std::int64_t k, std::int64_t out_prec) {
    if (k == 0) return LaurentSeries::one(x.field(), out_prec);
    if (x.is_zero()) fail(Err::DivisionByZero, "power of an (exact) zero series");
    const std::int64_t av = x.val() < 0 ? -x.val() : x.val();
    const std::int64_t ak = k < 0 ? -k : k;
    const std::int64_t pad = out_prec + (ak + 2) * (av + 1);
    return x.padded_exact(pad).int_pow(k).truncated(out_prec);
}

bool LaurentSeries::operator==(const LaurentSeries& other) const {
    return field_ == other.field_ && zero_ == other.zero_ && val_ == other.val_ &&
           prec_ == other.prec_ && digits_ == other.digits_;
}

std::pair<FqElem, std::int64_t> sgn_and_val(const LaurentSeries& a) {
    if (a.is_zero()) fail(Err::ZeroInput, "sgn/val of a zero series");
    return {a.coeff(a.val()), a.val()};
}

LaurentSeries one_unit_part(const LaurentSeries& a) {
    if (a.is_zero()) fail(Err::ZeroInput, "1-unit part of a zero series");
    FqElem lead_inv = a.field().inv(a.coeff(a.val()));
    return a.coeff_mul(lead_inv).shifted(-a.val());
}

LaurentSeries omega_part(const LaurentSeries& a) {
    if (a.is_zero()) fail(Err::ZeroInput, "monomial part of a zero series");
    return LaurentSeries::monomial(a.field(), a.coeff(a.val()), a.val(), a.prec());
}

bool coefficients_match(const LaurentSeries& x, const LaurentSeries& y,
                        std::int64_t* first_mismatch) {
    if (!(x.field() == y.field()))
        fail(Err::FieldMismatch, "comparing series over different fields");
    const std::int64_t P = std::min(x.prec(), y.prec());
    std::int64_t lo = P;
    if (!x.is_zero()) lo = std::min(lo, x.val());
    if (!y.is_zero()) lo = std::min(lo, y.val());
    for (std::int64_t j = lo; j < P; ++j) {
        if (x.coeff(j) != y.coeff(j)) {
            if (first_mismatch) *first_mismatch = j;
            return false;
        }
    }
    return true;
}

SeriesBuilder::SeriesBuilder(const Fq& F, std::int64_t lo, std::int64_t hi)
    : field_(F), lo_(lo), hi_(std::max(lo, hi)),
      digits_(std::size_t(hi_ - lo_) * F.ext_degree(), 0) {}

void SeriesBuilder::add(const LaurentSeries& x) { add_scaled(x, 1); }

void SeriesBuilder::add_scaled(const LaurentSeries& x, std::uint32_t b) {
    if (!(x.field() == field_)) fail(Err::FieldMismatch, "builder field mismatch");
    b %= field_.p();
    if (x.is_zero() || b == 0) return;
    const std::uint32_t e = field_.ext_degree();
    const std::int64_t hi = std::min(hi_, x.prec());
    std::vector<std::uint32_t> tmp(e);
    for (std::int64_t j = std::max(lo_, x.val()); j < hi; ++j) {
        const std::uint32_t* src = x.slot(j);
        std::uint32_t* dst = digits_.data() + std::size_t(j - lo_) * e;
        if (b == 1) {
            field_.raw_add(dst, src, dst);
        } else {
            field_.raw_scalar_mul(src, b, tmp.data());
            field_.raw_add(dst, tmp.data(), dst);
        }
    }
}

LaurentSeries SeriesBuilder::take(std::int64_t prec) {
    return LaurentSeries::normalized(field_, lo_, std::min(prec, hi_), std::move(digits_));
}

} // namespace gosszeta
