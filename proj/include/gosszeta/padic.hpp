#pragma once

#include <cstdint>
#include <vector>

#include "gosszeta/config.hpp"
#include "gosszeta/errors.hpp"

namespace gosszeta {

/// p-adic integer known modulo p^K, stored as base-p digits d_0..d_{K-1}.
class PadicInt {
public:
    /// Base-p digits of n mod p^K; negative n is encoded by complement.
    static PadicInt from_int(std::int64_t n, std::uint32_t p,
                             std::size_t K = kDefaultDigitPrecision);
    /// Explicit digit vector (each entry reduced mod p); K = digits.size().
    static PadicInt from_digits(std::uint32_t p, std::vector<std::uint32_t> digits);

    std::uint32_t p() const noexcept { return p_; }
    std::size_t digit_count() const noexcept { return digits_.size(); }
    const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }
    std::uint32_t digit(std::size_t t) const;

    bool is_zero() const;

    /// s + i, digitwise with carries, truncated to K digits.
    PadicInt add_int(std::uint64_t i) const;
    /// p^K - value(s) mod p^K, so that s + neg(s) = 0 mod p^K.
    PadicInt neg() const;

    /// True iff the low K digits agree (congruence mod p^K).
    bool congruent(const PadicInt& other, std::size_t K) const;

    bool operator==(const PadicInt& other) const {
        return p_ == other.p_ && digits_ == other.digits_;
    }
    bool operator!=(const PadicInt& other) const { return !(*this == other); }

private:
    PadicInt(std::uint32_t p, std::vector<std::uint32_t> digits)
        : p_(p), digits_(std::move(digits)) {}

    std::uint32_t p_;
    std::vector<std::uint32_t> digits_;
};

/// Binomial coefficient (s choose j) reduced mod p: the digitwise product
/// of digit binomials, which agrees with the integer binomial whenever s
/// encodes a nonnegative integer and extends to all of Z_p by continuity.
/// Requires the digit precision to determine the answer: p^K > j.
std::uint32_t binom_mod_p(const PadicInt& s, std::uint64_t j);

/// Number of base-p digits of j (0 for j = 0).
std::size_t digits_needed(std::uint64_t j, std::uint32_t p);

} // namespace gosszeta
