#include "gosszeta/zeta.hpp"

#include <future>
#include <string>

namespace gosszeta {

namespace {

void check_in_domain(const LaurentSeries& a) {
    if (a.is_zero() || a.val() >= 0)
        fail(Err::NotInA, "need |a| > 1, i.e. val(a) < 0");
}

// q^count against the enumeration cap, overflow-safe.
std::uint64_t enumeration_size(std::uint64_t q, std::int64_t count) {
    std::uint64_t n = 1;
    for (std::int64_t t = 0; t < count; ++t) {
        if (n > kMaxEnumerationSize / q)
            fail(Err::EnumerationTooLarge,
                 "q^" + std::to_string(count) + " exceeds the enumeration cap");
        n *= q;
    }
    return n;
}

} // namespace

std::int64_t inner_sum_bound(std::uint64_t q, std::int64_t m, std::int64_t l) {
    return std::int64_t(q - 1) * (2 * m + l) * (l + 1) / 2;
}

std::int64_t damping_exponent(ZetaSign sign, std::int64_t m, std::int64_t l, std::int64_t z) {
    const std::int64_t e = (m + l + 1) * z;
    return sign == ZetaSign::proof ? e : -e;
}

InnerSumTable::InnerSumTable(const LaurentSeries& a, std::int64_t l, std::int64_t unit_prec)
    : field_(a.field()), l_(l), prec_(unit_prec) {
    check_in_domain(a);
    if (l < 0) fail(Err::BadIndex, "degree bound l must be >= 0");
    if (l > kMaxInnerDegree)
        fail(Err::EnumerationTooLarge, "l exceeds cap " + std::to_string(kMaxInnerDegree));
    if (unit_prec < 1) fail(Err::BadPrecision, "unit precision must be >= 1");

    const Fq& F = field_;
    const std::uint64_t count = enumeration_size(F.order(), l + 1);
    const std::int64_t m = -a.val();
    const LaurentSeries a_exact = a.padded_exact(unit_prec - m).truncated(unit_prec - m);
    const std::vector<FqElem> elems = F.enumerate();
    const LaurentSeries one = LaurentSeries::one(F, unit_prec);

    std::vector<SeriesBuilder> acc; // index j-1 for P_j
    acc.reserve(std::size_t(unit_prec));
    std::vector<std::uint64_t> odo(std::size_t(l + 1), 0); // digits of k, odo[t] ~ u^t

    for (std::uint64_t idx = 0; idx < count; ++idx) {
        // k = sum_t odo[t] u^t, added onto a
        LaurentSeries ka = a_exact;
        for (std::int64_t t = 0; t <= l; ++t) {
            const FqElem& b = elems[std::size_t(odo[std::size_t(t)])];
            if (!F.is_zero(b))
                ka = ka + LaurentSeries::monomial(F, b, t, unit_prec - m);
        }
        const LaurentSeries lam = one_unit_part(ka) - one;
        LaurentSeries pow = lam;
        for (std::size_t j = 1; !pow.is_zero(); ++j) {
            if (acc.size() < j) acc.emplace_back(F, 1, unit_prec);
            acc[j - 1].add(pow);
            pow = (pow * lam).truncated(unit_prec);
        }
        // advance the odometer (last coordinate fastest)
        for (std::int64_t t = l; t >= 0; --t) {
            if (++odo[std::size_t(t)] < F.order()) break;
            odo[std::size_t(t)] = 0;
        }
    }
    power_sums_.reserve(acc.size());
    for (auto& b : acc) power_sums_.push_back(b.take(unit_prec));
}

LaurentSeries InnerSumTable::sum_pow(const PadicInt& t) const {
    if (t.p() != field_.p())
        fail(Err::FieldMismatch, "exponent prime differs from field characteristic");
    // P_0 = q^(l+1) * 1 = 0 in characteristic p, so the j = 0 term drops.
    SeriesBuilder out(field_, 1, prec_);
    for (std::size_t j = 1; j <= power_sums_.size(); ++j) {
        const LaurentSeries& pj = power_sums_[j - 1];
        if (pj.is_zero()) continue;
        out.add_scaled(pj, binom_mod_p(t, j));
    }
    return out.take(prec_);
}

LaurentSeries inner_sum(const LaurentSeries& a, const PadicInt& s, std::int64_t l) {
    check_in_domain(a);
    const std::int64_t unit_prec = a.prec() - a.val();
    InnerSumTable table(a, l, unit_prec);
    return table.sum_pow(s.neg());
}

LaurentSeries hurwitz_goss(const LaurentSeries& s0, const PadicInt& s,
                           const HurwitzParams& params, ZetaSign sign, int threads,
                           HurwitzMeta* meta) {
    check_in_domain(params.a);
    if (s0.is_zero()) fail(Err::ZeroInput, "s0 must be nonzero");
    if (!(s0.field() == params.a.field()))
        fail(Err::FieldMismatch, "s0 and a live in different fields");
    if (s.p() != s0.field().p())
        fail(Err::FieldMismatch, "exponent prime differs from field characteristic");
    if (params.prec < 1) fail(Err::BadPrecision, "target precision must be >= 1");

    const Fq& F = s0.field();
    const std::uint64_t q = F.order();
    const std::int64_t m = params.m();
    const std::int64_t z = params.z;
    const std::int64_t v0 = s0.val();
    const std::int64_t N = params.prec;

    // least l whose valuation bound reaches N
    std::int64_t l_star = -1;
    for (std::int64_t l = 0;; ++l) {
        if (inner_sum_bound(q, m, l) + damping_exponent(sign, m, l, z) * v0 >= N) {
            l_star = l;
            break;
        }
        if (l >= kMaxInnerDegree)
            fail(Err::NoConvergence,
                 "valuation bound stays below " + std::to_string(N) + " up to l = " +
                     std::to_string(kMaxInnerDegree));
    }

    const PadicInt t = s.neg();
    auto eval_term = [&](std::int64_t l) -> LaurentSeries {
        const std::int64_t dexp = damping_exponent(sign, m, l, z);
        const std::int64_t dval = dexp * v0;
        if (dval >= N) return LaurentSeries::zero(F, N); // entirely beyond target
        InnerSumTable table(params.a, l, N - dval);
        LaurentSeries term = table.sum_pow(t);
        if (term.is_zero()) return LaurentSeries::zero(F, N);
        if (dexp != 0) term = exact_int_pow(s0, dexp, N - term.val()) * term;
        return term;
    };

    std::vector<LaurentSeries> terms;
    terms.reserve(std::size_t(l_star + 1));
    if (threads > 1) {
        std::vector<std::future<LaurentSeries>> futs;
        for (std::int64_t l = 0; l <= l_star; ++l)
            futs.push_back(std::async(std::launch::async, eval_term, l));
        for (auto& f : futs) terms.push_back(f.get());
    } else {
        for (std::int64_t l = 0; l <= l_star; ++l) terms.push_back(eval_term(l));
    }

    std::int64_t lo = 0;
    for (const auto& term : terms) lo = std::min(lo, term.val());
    SeriesBuilder out(F, lo, N);
    for (const auto& term : terms) out.add(term);

    if (meta) {
        meta->l_star = l_star;
        meta->terms.clear();
        for (std::int64_t l = 0; l <= l_star; ++l) {
            const LaurentSeries& term = terms[std::size_t(l)];
            meta->terms.push_back({l,
                                   inner_sum_bound(q, m, l) +
                                       damping_exponent(sign, m, l, z) * v0,
                                   term.is_zero() ? term.prec() : term.val(),
                                   term.is_zero()});
        }
    }
    return out.take(N);
}

LaurentSeries goss_partial(const SPoint& w, std::int64_t l_max) {
    if (l_max < 0) fail(Err::BadIndex, "l_max must be >= 0");
    if (l_max > kMaxInnerDegree)
        fail(Err::EnumerationTooLarge, "l_max exceeds cap " + std::to_string(kMaxInnerDegree));
    const Fq& F = w.s0.field();
    const std::int64_t U = std::max<std::int64_t>(1, w.s0.prec());
    const PadicInt t = w.s.neg();

    LaurentSeries total = LaurentSeries::one(F, U); // l = 0: a = 1, <1>^{-s} = 1
    const std::vector<FqElem> elems = F.enumerate();
    for (std::int64_t l = 1; l <= l_max; ++l) {
        const std::uint64_t count = enumeration_size(F.order(), l);
        SeriesBuilder monic_sum(F, 0, U + l);
        std::vector<std::uint64_t> odo(std::size_t(l), 0); // odo[t] ~ coefficient of T^t
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FqElem> high_to_low(std::size_t(l + 1));
            high_to_low[0] = F.one();
            for (std::int64_t c = 0; c < l; ++c)
                high_to_low[std::size_t(l - c)] = elems[std::size_t(odo[std::size_t(c)])];
            LaurentSeries a = LaurentSeries::from_t_coeffs(F, high_to_low, U);
            monic_sum.add(bracket_pow(a, t));
            for (std::int64_t c = 0; c < l; ++c) {
                if (++odo[std::size_t(c)] < F.order()) break;
                odo[std::size_t(c)] = 0;
            }
        }
        total = total + w.s0.int_pow(-l) * monic_sum.take(U + l);
    }
    return total;
}

LaurentSeries goss_special_direct(std::uint64_t n, const Fq& F) {
    const std::uint64_t q = F.order();
    // degree-l blocks with l(q-1) > n cancel identically; only l <= n/(q-1) count
    const std::int64_t l_cut = std::int64_t(n / (q - 1));
    if (n == 0) return LaurentSeries::one(F, 1);

    LaurentSeries total = LaurentSeries::one(F, 1); // l = 0 block: 1^n
    const std::vector<FqElem> elems = F.enumerate();
    for (std::int64_t l = 1; l <= l_cut; ++l) {
        const std::uint64_t count = enumeration_size(q, l);
        const std::int64_t deg_pow = std::int64_t(n) * l;
        SeriesBuilder block(F, -deg_pow, 1);
        std::vector<std::uint64_t> odo(std::size_t(l), 0);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<FqElem> high_to_low(std::size_t(l + 1));
            high_to_low[0] = F.one();
            for (std::int64_t c = 0; c < l; ++c)
                high_to_low[std::size_t(l - c)] = elems[std::size_t(odo[std::size_t(c)])];
            LaurentSeries a = LaurentSeries::from_t_coeffs(F, high_to_low, 2);
            block.add(exact_int_pow(a, std::int64_t(n), 1));
            for (std::int64_t c = 0; c < l; ++c) {
                if (++odo[std::size_t(c)] < q) break;
                odo[std::size_t(c)] = 0;
            }
        }
        total = total + block.take(1);
    }
    return total.truncated(1);
}

LaurentSeries goss_special_recurrence(std::uint64_t n, const Fq& F) {
    const std::uint64_t q = F.order();
    const std::uint32_t p = F.p();
    std::vector<LaurentSeries> values;
    values.reserve(n + 1);
    values.push_back(LaurentSeries::one(F, 1));
    for (std::uint64_t k = 1; k <= n; ++k) {
        const PadicInt kp = PadicInt::from_int(std::int64_t(k), p);
        // window generous enough for every T^i * z(-i) involved
        std::int64_t width = 2;
        for (std::uint64_t i = 0; i < k; ++i)
            if (!values[i].is_zero())
                width = std::max<std::int64_t>(width, std::int64_t(i) - values[i].val() + 1);
        SeriesBuilder acc(F, -width, 1);
        acc.add(LaurentSeries::one(F, 1));
        for (std::uint64_t i = 0; i < k; ++i) {
            if ((k - i) % (q - 1) != 0) continue;
            const std::uint32_t b = binom_mod_p(kp, i);
            if (b == 0 || values[i].is_zero()) continue;
            const LaurentSeries shifted =
                values[i].padded_exact(1 + std::int64_t(i)).shifted(-std::int64_t(i));
            acc.add_scaled(shifted, (p - b) % p); // subtract
        }
        values.push_back(acc.take(1));
    }
    return values[n];
}

} // namespace gosszeta
