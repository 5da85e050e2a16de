#include "gosszeta/padic.hpp"

#include <string>

namespace gosszeta {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) acc = acc * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return acc;
}

// (a choose b) mod p for digit arguments 0 <= a, b < p, p prime.
std::uint32_t digit_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    if (b > a) return 0;
    if (b == 0 || b == a) return 1;
    std::uint64_t num = 1, den = 1;
    for (std::uint32_t t = 0; t < b; ++t) {
        num = num * ((a - t) % p) % p;
        den = den * ((t + 1) % p) % p;
    }
    return std::uint32_t(num * pow_mod(den, p - 2, p) % p);
}

} // namespace

PadicInt PadicInt::from_int(std::int64_t n, std::uint32_t p, std::size_t K) {
    if (p < 2) fail(Err::NonPrimeP, "p = " + std::to_string(p));
    if (K < 1) fail(Err::BadPrecision, "digit precision must be >= 1");
    std::vector<std::uint32_t> digits(K);
    for (std::size_t t = 0; t < K; ++t) {
        std::int64_t r = n % std::int64_t(p);
        if (r < 0) r += p;
        digits[t] = std::uint32_t(r);
        n = (n - r) / std::int64_t(p);
    }
    return PadicInt(p, std::move(digits));
}

PadicInt PadicInt::from_digits(std::uint32_t p, std::vector<std::uint32_t> digits) {
    if (p < 2) fail(Err::NonPrimeP, "p = " + std::to_string(p));
    if (digits.empty()) fail(Err::BadPrecision, "digit precision must be >= 1");
    for (auto& d : digits) d %= p;
    return PadicInt(p, std::move(digits));
}

std::uint32_t PadicInt::digit(std::size_t t) const {
    if (t >= digits_.size())
        fail(Err::InsufficientDigitPrecision,
             "digit " + std::to_string(t) + " beyond precision " +
                 std::to_string(digits_.size()));
    return digits_[t];
}

bool PadicInt::is_zero() const {
    for (auto d : digits_)
        if (d != 0) return false;
    return true;
}

PadicInt PadicInt::add_int(std::uint64_t i) const {
    std::vector<std::uint32_t> digits = digits_;
    std::uint64_t carry = i;
    for (auto& d : digits) {
        if (carry == 0) break;
        std::uint64_t s = d + carry;
        d = std::uint32_t(s % p_);
        carry = s / p_;
    }
    return PadicInt(p_, std::move(digits));
}

PadicInt PadicInt::neg() const {
    std::vector<std::uint32_t> digits = digits_;
    std::size_t t = 0;
    while (t < digits.size() && digits[t] == 0) ++t;
    if (t == digits.size()) return *this; // -0 = 0
    digits[t] = p_ - digits[t];
    for (++t; t < digits.size(); ++t) digits[t] = p_ - 1 - digits[t];
    return PadicInt(p_, std::move(digits));
}

bool PadicInt::congruent(const PadicInt& other, std::size_t K) const {
    if (p_ != other.p_) return false;
    if (K > digits_.size() || K > other.digits_.size())
        fail(Err::InsufficientDigitPrecision, "congruence window beyond digits");
    for (std::size_t t = 0; t < K; ++t)
        if (digits_[t] != other.digits_[t]) return false;
    return true;
}

std::size_t digits_needed(std::uint64_t j, std::uint32_t p) {
    std::size_t n = 0;
    while (j > 0) {
        j /= p;
        ++n;
    }
    return n;
}

std::uint32_t binom_mod_p(const PadicInt& s, std::uint64_t j) {
    const std::uint32_t p = s.p();
    if (digits_needed(j, p) > s.digit_count())
        fail(Err::InsufficientDigitPrecision,
             "p^K <= j: binomial undetermined for j = " + std::to_string(j));
    std::uint32_t acc = 1;
    std::size_t t = 0;
    while (j > 0 && acc != 0) {
        acc = std::uint32_t(std::uint64_t(acc) * digit_binom(s.digit(t), std::uint32_t(j % p), p) % p);
        j /= p;
        ++t;
    }
    return acc;
}

} // namespace gosszeta
