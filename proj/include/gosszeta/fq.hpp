#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gosszeta/config.hpp"
#include "gosszeta/errors.hpp"

namespace gosszeta {

/// Element of F_{p^e}: residues of the polynomial basis, low-to-high, length e.
using FqElem = std::vector<std::uint32_t>;

/// The finite field F_q, q = p^e, with a monic irreducible modulus over Z/p.
///
/// Immutable after construction; all element operations are const and the
/// object can be shared freely across threads.
class Fq {
public:
    /// Builds F_{p^e}. When `modulus` is empty the construction picks the
    /// monic irreducible of degree e whose non-leading coefficient vector
    /// (read low-to-high as base-p digits) encodes the smallest integer,
    /// so field tables are reproducible across runs.
    static Fq make(std::uint32_t p, std::uint32_t e,
                   std::vector<std::uint32_t> modulus = {});

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t ext_degree() const noexcept { return e_; }
    /// q = p^e.
    std::uint64_t order() const noexcept { return q_; }
    /// Coefficients c_0..c_e of the modulus, monic (c_e = 1). For e = 1 this
    /// is the placeholder x - 0, i.e. {0, 1}.
    const std::vector<std::uint32_t>& modulus() const noexcept { return mod_; }

    bool operator==(const Fq& other) const noexcept {
        return p_ == other.p_ && e_ == other.e_ && mod_ == other.mod_;
    }

    FqElem zero() const { return FqElem(e_, 0); }
    FqElem one() const;
    /// Scalar embedding of an integer through the prime subfield.
    FqElem from_int(std::int64_t n) const;
    /// Validates length and reduces every entry mod p.
    FqElem element(std::vector<std::uint32_t> digits) const;

    bool is_zero(const FqElem& x) const;
    bool is_one(const FqElem& x) const;

    FqElem add(const FqElem& x, const FqElem& y) const;
    FqElem sub(const FqElem& x, const FqElem& y) const;
    FqElem neg(const FqElem& x) const;
    FqElem mul(const FqElem& x, const FqElem& y) const;
    FqElem inv(const FqElem& x) const; ///< DivisionByZero on 0.
    /// x^n for any integer n; negative n goes through inv. x^0 = 1, also for
    /// x = 0 (the 0^0 = 1 convention used by the character sums).
    FqElem int_pow(const FqElem& x, std::int64_t n) const;

    /// All q elements, coefficient vectors in lexicographic order; the first
    /// element is 0.
    std::vector<FqElem> enumerate() const;
    /// k-th element of the enumeration order, 0 <= k < q.
    FqElem element_at(std::uint64_t k) const;

    /// Sum over all alpha in F_q of alpha^i, with 0^0 = 1.
    FqElem power_sum(std::uint64_t i) const;

    // Allocation-free kernels on digit spans of length ext_degree(); used by
    // the series layer. `out` must not alias the inputs for raw_mul.
    void raw_add(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const;
    void raw_neg(const std::uint32_t* x, std::uint32_t* out) const;
    void raw_mul(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const;
    /// Multiply by a prime-subfield scalar b in [0, p).
    void raw_scalar_mul(const std::uint32_t* x, std::uint32_t b, std::uint32_t* out) const;
    /// Fused out += x*y.
    void raw_mul_add(const std::uint32_t* x, const std::uint32_t* y, std::uint32_t* out) const;
    bool raw_is_zero(const std::uint32_t* x) const;

    std::string describe() const; ///< e.g. "F_4 = F_2[x]/(x^2 + x + 1)"

private:
    Fq(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> mod,
       std::uint64_t q)
        : p_(p), e_(e), q_(q), mod_(std::move(mod)) {}

    void check_element(const FqElem& x) const;

    std::uint32_t p_;
    std::uint32_t e_;
    std::uint64_t q_;
    std::vector<std::uint32_t> mod_; // length e_+1, mod_[e_] == 1
};

bool is_prime_u32(std::uint32_t n);

} // namespace gosszeta
