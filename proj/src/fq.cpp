#include "gosszeta/fq.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace gosszeta {

namespace {

// Remainder of a mod b over Z/p, b monic-normalized first. Coefficients
// low-to-high; trailing zeros trimmed.
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint32_t p) {
    auto deg = [](const std::vector<std::uint32_t>& v) -> std::int64_t {
        for (std::int64_t d = std::int64_t(v.size()) - 1; d >= 0; --d)
            if (v[std::size_t(d)] != 0) return d;
        return -1;
    };
    std::int64_t db = deg(b);
    // divide by the leading coefficient to make b monic
    std::uint32_t lead = b[std::size_t(db)];
    std::uint32_t lead_inv = 1;
    for (std::uint32_t t = 1; t < p; ++t)
        if (t * lead % p == 1) { lead_inv = t; break; }
    while (true) {
        std::int64_t da = deg(a);
        if (da < db) break;
        std::uint64_t f = std::uint64_t(a[std::size_t(da)]) * lead_inv % p;
        for (std::int64_t t = 0; t <= db; ++t) {
            std::uint64_t sub = f * b[std::size_t(t)] % p;
            std::uint32_t& c = a[std::size_t(da - db + t)];
            c = std::uint32_t((c + p - sub) % p);
        }
    }
    std::int64_t da = deg(a);
    a.resize(std::size_t(da + 1));
    return a;
}

bool poly_is_zero(const std::vector<std::uint32_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::uint32_t c) { return c == 0; });
}

// Irreducibility over Z/p by trial division against every monic polynomial
// of degree 1..e/2.
bool is_irreducible(const std::vector<std::uint32_t>& mod, std::uint32_t p,
                    std::uint32_t e) {
    for (std::uint32_t d = 1; 2 * d <= e; ++d) {
        // all monic divisor candidates x^d + sum c_t x^t
        std::uint64_t count = 1;
        for (std::uint32_t t = 0; t < d; ++t) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> div(d + 1, 0);
            div[d] = 1;
            std::uint64_t rest = idx;
            for (std::uint32_t t = 0; t < d; ++t) {
                div[t] = std::uint32_t(rest % p);
                rest /= p;
            }
            if (poly_is_zero(poly_mod(mod, div, p))) return false;
        }
    }
    return true;
}

} // namespace

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Fq Fq::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
    if (!is_prime_u32(p)) fail(Err::NonPrimeP, "p = " + std::to_string(p));
    if (e < 1) fail(Err::DegreeMismatch, "extension degree must be >= 1");
    if (e > kMaxExtensionDegree)
        fail(Err::Unsupported, "extension degree " + std::to_string(e) + " exceeds cap");

    std::uint64_t q = 1;
    for (std::uint32_t t = 0; t < e; ++t) q *= p;

    if (e == 1) {
        // fixed placeholder x - 0
        if (!modulus.empty() && modulus != std::vector<std::uint32_t>{0, 1})
            fail(Err::DegreeMismatch, "e = 1 uses the fixed modulus x");
        return Fq(p, e, {0, 1}, q);
    }

    if (modulus.empty()) {
        std::uint64_t count = q; // p^e candidate tails
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> cand(e + 1, 0);
            cand[e] = 1;
            std::uint64_t rest = idx;
            for (std::uint32_t t = 0; t < e; ++t) {
                cand[t] = std::uint32_t(rest % p);
                rest /= p;
            }
            if (is_irreducible(cand, p, e)) return Fq(p, e, std::move(cand), q);
        }
        fail(Err::ReducibleModulus, "no irreducible of degree " + std::to_string(e));
    }

    if (modulus.size() != std::size_t(e) + 1)
        fail(Err::DegreeMismatch, "modulus needs e+1 coefficients");
    for (auto& c : modulus) c %= p;
    if (modulus[e] != 1)
        fail(Err::DegreeMismatch, "modulus must be monic of degree e");
    if (!is_irreducible(modulus, p, e))
        fail(Err::ReducibleModulus, "modulus factors over Z/" + std::to_string(p));
    return Fq(p, e, std::move(modulus), q);
}

FqElem Fq::one() const {
    FqElem x(e_, 0);
    x[0] = 1;
    return x;
}

FqElem Fq::from_int(std::int64_t n) const {
    std::int64_t r = n % std::int64_t(p_);
    if (r < 0) r += p_;
    FqElem x(e_, 0);
    x[0] = std::uint32_t(r);
    return x;
}

FqElem Fq::element(std::vector<std::uint32_t> digits) const {
    if (digits.size() != e_)
        fail(Err::DegreeMismatch, "element needs exactly e digits");
    for (auto& d : digits) d %= p_;
    return digits;
}

void Fq::check_element(const FqElem& x) const {
    if (x.size() != e_) fail(Err::DegreeMismatch, "element has wrong digit count");
}

bool Fq::is_zero(const FqElem& x) const {
    check_element(x);
    return raw_is_zero(x.data());
}

bool Fq::is_one(const FqElem& x) const {
    check_element(x);
    if (x[0] != 1) return false;
    for (std::uint32_t t = 1; t < e_; ++t)
        if (x[t] != 0) return false;
    return true;
}

void Fq::raw_add(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const {
    for (std::uint32_t t = 0; t < e_; ++t) {
        std::uint32_t s = x[t] + y[t];
        out[t] = s >= p_ ? s - p_ : s;
    }
}

void Fq::raw_neg(const std::uint32_t* x, std::uint32_t* out) const {
    for (std::uint32_t t = 0; t < e_; ++t) out[t] = x[t] == 0 ? 0 : p_ - x[t];
}

void Fq::raw_scalar_mul(const std::uint32_t* x, std::uint32_t b, std::uint32_t* out) const {
    for (std::uint32_t t = 0; t < e_; ++t)
        out[t] = std::uint32_t(std::uint64_t(x[t]) * b % p_);
}

bool Fq::raw_is_zero(const std::uint32_t* x) const {
    for (std::uint32_t t = 0; t < e_; ++t)
        if (x[t] != 0) return false;
    return true;
}

void Fq::raw_mul(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const {
    if (e_ == 1) {
        out[0] = std::uint32_t(std::uint64_t(x[0]) * y[0] % p_);
        return;
    }
    std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (x[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            acc[i + j] += std::uint64_t(x[i]) * y[j];
    }
    // fold x^d down with the monic modulus: x^e = -(mod_0 + ... + mod_{e-1} x^{e-1})
    for (std::uint32_t d = 2 * e_ - 2; d >= e_; --d) {
        std::uint64_t c = acc[d] % p_;
        if (c != 0) {
            std::uint64_t cneg = p_ - c;
            for (std::uint32_t t = 0; t < e_; ++t)
                acc[d - e_ + t] += cneg * mod_[t];
        }
        acc[d] = 0;
    }
    for (std::uint32_t t = 0; t < e_; ++t) out[t] = std::uint32_t(acc[t] % p_);
}

void Fq::raw_mul_add(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const {
    if (e_ == 1) {
        out[0] = std::uint32_t((std::uint64_t(x[0]) * y[0] + out[0]) % p_);
        return;
    }
    std::array<std::uint32_t, kMaxExtensionDegree> tmp;
    raw_mul(x, y, tmp.data());
    raw_add(out, tmp.data(), out);
}

FqElem Fq::add(const FqElem& x, const FqElem& y) const {
    check_element(x);
    check_element(y);
    FqElem out(e_);
    raw_add(x.data(), y.data(), out.data());
    return out;
}

FqElem Fq::neg(const FqElem& x) const {
    check_element(x);
    FqElem out(e_);
    raw_neg(x.data(), out.data());
    return out;
}

FqElem Fq::sub(const FqElem& x, const FqElem& y) const { return add(x, neg(y)); }

FqElem Fq::mul(const FqElem& x, const FqElem& y) const {
    check_element(x);
    check_element(y);
    FqElem out(e_);
    raw_mul(x.data(), y.data(), out.data());
    return out;
}

FqElem Fq::inv(const FqElem& x) const {
    check_element(x);
    if (raw_is_zero(x.data())) fail(Err::DivisionByZero, "inverse of 0");
    if (e_ == 1) {
        // extended Euclid on integers mod p
        std::int64_t a = x[0], m = p_;
        std::int64_t t0 = 0, t1 = 1, r0 = m, r1 = a;
        while (r1 != 0) {
            std::int64_t f = r0 / r1;
            std::int64_t r2 = r0 - f * r1;
            std::int64_t t2 = t0 - f * t1;
            r0 = r1; r1 = r2;
            t0 = t1; t1 = t2;
        }
        std::int64_t v = t0 % m;
        if (v < 0) v += m;
        FqElem out(1);
        out[0] = std::uint32_t(v);
        return out;
    }
    // extended Euclid on polynomials over Z/p against the modulus
    using Poly = std::vector<std::uint32_t>;
    auto deg = [](const Poly& v) -> std::int64_t {
        for (std::int64_t d = std::int64_t(v.size()) - 1; d >= 0; --d)
            if (v[std::size_t(d)] != 0) return d;
        return -1;
    };
    auto scalar_inv = [&](std::uint32_t c) {
        for (std::uint32_t t = 1; t < p_; ++t)
            if (t * c % p_ == 1) return t;
        return 0u;
    };
    Poly r0 = mod_, r1(x.begin(), x.end());
    Poly t0 = {0}, t1 = {1};
    auto sub_scaled = [&](Poly& a, const Poly& b, std::uint32_t f, std::int64_t shift) {
        if (a.size() < b.size() + std::size_t(shift)) a.resize(b.size() + std::size_t(shift), 0);
        for (std::size_t t = 0; t < b.size(); ++t) {
            std::uint64_t s = std::uint64_t(f) * b[t] % p_;
            std::uint32_t& c = a[t + std::size_t(shift)];
            c = std::uint32_t((c + p_ - s) % p_);
        }
    };
    while (deg(r1) > 0) {
        while (deg(r0) >= deg(r1)) {
            std::int64_t shift = deg(r0) - deg(r1);
            std::uint32_t f = std::uint32_t(
                std::uint64_t(r0[std::size_t(deg(r0))]) * scalar_inv(r1[std::size_t(deg(r1))]) % p_);
            sub_scaled(r0, r1, f, shift);
            sub_scaled(t0, t1, f, shift);
        }
        std::swap(r0, r1);
        std::swap(t0, t1);
    }
    // r1 is a nonzero constant c: inverse = t1 / c mod modulus
    std::uint32_t c = r1[0];
    std::uint32_t ci = scalar_inv(c);
    Poly res = poly_mod(std::move(t1), mod_, p_);
    FqElem out(e_, 0);
    for (std::size_t t = 0; t < res.size() && t < e_; ++t)
        out[t] = std::uint32_t(std::uint64_t(res[t]) * ci % p_);
    return out;
}

FqElem Fq::int_pow(const FqElem& x, std::int64_t n) const {
    check_element(x);
    if (n == 0) return one(); // includes 0^0 = 1
    FqElem base = x;
    if (n < 0) {
        base = inv(x);
        n = -n;
    }
    FqElem acc = one();
    std::uint64_t k = std::uint64_t(n);
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

FqElem Fq::element_at(std::uint64_t k) const {
    FqElem x(e_, 0);
    // lexicographic on (c_0, ..., c_{e-1}): c_0 is the most significant digit
    for (std::uint32_t t = e_; t-- > 0;) {
        x[t] = std::uint32_t(k % p_);
        k /= p_;
    }
    return x;
}

std::vector<FqElem> Fq::enumerate() const {
    std::vector<FqElem> all;
    all.reserve(std::size_t(q_));
    for (std::uint64_t k = 0; k < q_; ++k) all.push_back(element_at(k));
    return all;
}

FqElem Fq::power_sum(std::uint64_t i) const {
    FqElem acc = zero();
    for (std::uint64_t k = 0; k < q_; ++k)
        acc = add(acc, int_pow(element_at(k), std::int64_t(i)));
    return acc;
}

std::string Fq::describe() const {
    std::ostringstream os;
    os << "F_" << q_;
    if (e_ > 1) {
        os << " = F_" << p_ << "[x]/(";
        bool first = true;
        for (std::uint32_t d = e_ + 1; d-- > 0;) {
            std::uint32_t c = mod_[d];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (d == 0 || c != 1) os << c;
            if (d >= 1) {
                if (c != 1) os << "*";
                os << "x";
                if (d > 1) os << "^" << d;
            }
        }
        os << ")";
    }
    return os.str();
}

const char* err_name(Err kind) {
    switch (kind) {
        case Err::NonPrimeP: return "NonPrimeP";
        case Err::ReducibleModulus: return "ReducibleModulus";
        case Err::DegreeMismatch: return "DegreeMismatch";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::BadPrecision: return "BadPrecision";
        case Err::FieldMismatch: return "FieldMismatch";
        case Err::ZeroInput: return "ZeroInput";
        case Err::InsufficientDigitPrecision: return "InsufficientDigitPrecision";
        case Err::NotOneUnit: return "NotOneUnit";
        case Err::NotMonic: return "NotMonic";
        case Err::NotInA: return "NotInA";
        case Err::EnumerationTooLarge: return "EnumerationTooLarge";
        case Err::NoConvergence: return "NoConvergence";
        case Err::BadIndex: return "BadIndex";
        case Err::Unsupported: return "Unsupported";
    }
    return "UnknownError";
}

} // namespace gosszeta
