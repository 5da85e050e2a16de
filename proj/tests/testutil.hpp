#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "gosszeta/unit_pow.hpp"
#include "gosszeta/zeta.hpp"

namespace gosszeta::test {

inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("GOSSZETA_TEST_SEED"))
        return std::strtoull(env, nullptr, 10);
    return kDefaultSeed;
}

struct Rng {
    std::mt19937_64 gen{test_seed()};

    std::uint64_t below(std::uint64_t n) {
        return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen);
    }
    std::int64_t in_range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen);
    }

    FqElem elem(const Fq& F) { return F.element_at(below(F.order())); }

    FqElem nonzero_elem(const Fq& F) {
        return F.element_at(1 + below(F.order() - 1));
    }

    LaurentSeries nonzero_series(const Fq& F, std::int64_t val_lo, std::int64_t val_hi,
                                 std::int64_t prec) {
        const std::int64_t v = in_range(val_lo, val_hi);
        std::vector<FqElem> coeffs;
        coeffs.push_back(nonzero_elem(F));
        for (std::int64_t j = v + 1; j < prec; ++j) coeffs.push_back(elem(F));
        return LaurentSeries::make(F, v, coeffs, prec);
    }

    /// 1 + (something with val >= 1)
    LaurentSeries one_unit(const Fq& F, std::int64_t prec) {
        std::vector<FqElem> coeffs{F.one()};
        for (std::int64_t j = 1; j < prec; ++j) coeffs.push_back(elem(F));
        return LaurentSeries::make(F, 0, coeffs, prec);
    }

    PadicInt padic(std::uint32_t p, std::size_t K = kDefaultDigitPrecision) {
        std::vector<std::uint32_t> digits(K);
        for (auto& d : digits) d = std::uint32_t(below(p));
        return PadicInt::from_digits(p, std::move(digits));
    }
};

/// Exact factorial-formula binomial (fits in uint64 for n <= 62).
inline std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (std::uint64_t t = 0; t < k; ++t) acc = acc * (n - t) / (t + 1);
    return acc;
}

/// Literal per-translate evaluation of the inner sum: the independent oracle
/// for InnerSumTable's reordered accumulation.
inline LaurentSeries inner_sum_by_enumeration(const LaurentSeries& a, const PadicInt& s,
                                              std::int64_t l) {
    const Fq& F = a.field();
    const PadicInt t = s.neg();
    const std::vector<FqElem> elems = F.enumerate();
    std::vector<std::uint64_t> odo(std::size_t(l + 1), 0);
    std::uint64_t count = 1;
    for (std::int64_t j = 0; j <= l; ++j) count *= F.order();
    LaurentSeries acc = LaurentSeries::zero(F, a.prec() - a.val());
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        LaurentSeries k = LaurentSeries::zero(F, a.prec());
        for (std::int64_t j = 0; j <= l; ++j)
            k = k + LaurentSeries::monomial(F, elems[std::size_t(odo[std::size_t(j)])], j,
                                            a.prec());
        acc = acc + bracket_pow(k + a, t);
        for (std::int64_t j = l; j >= 0; --j) {
            if (++odo[std::size_t(j)] < F.order()) break;
            odo[std::size_t(j)] = 0;
        }
    }
    return acc;
}

} // namespace gosszeta::test
