#include "gosszeta/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gosszeta {

namespace {

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

std::int64_t parse_int(const std::string& text) {
    if (text.empty()) fail(Err::Unsupported, "empty integer literal");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(text, &pos);
    } catch (const std::exception&) {
        fail(Err::Unsupported, "bad integer literal '" + text + "'");
    }
    if (pos != text.size()) fail(Err::Unsupported, "bad integer literal '" + text + "'");
    return v;
}

// splits on top-level commas (bracketed digit vectors keep theirs)
std::vector<std::string> split_top_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

FqElem parse_elem(const Fq& F, const std::string& text) {
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') fail(Err::Unsupported, "unclosed digit vector '" + text + "'");
        std::vector<std::uint32_t> digits;
        for (const auto& part : split_top_commas(text.substr(1, text.size() - 2))) {
            std::int64_t v = parse_int(part);
            std::int64_t r = v % std::int64_t(F.p());
            if (r < 0) r += F.p();
            digits.push_back(std::uint32_t(r));
        }
        if (digits.size() != F.ext_degree())
            fail(Err::DegreeMismatch, "digit vector needs e = " +
                                          std::to_string(F.ext_degree()) + " entries");
        return F.element(std::move(digits));
    }
    return F.from_int(parse_int(text));
}

std::string monomial_text(std::int64_t exp_u) {
    if (exp_u == 0) return "";
    if (exp_u == -1) return "T";
    if (exp_u == 1) return "u";
    std::ostringstream os;
    if (exp_u < 0)
        os << "T^" << -exp_u;
    else
        os << "u^" << exp_u;
    return os.str();
}

std::string render_terms(const LaurentSeries& x) {
    const Fq& F = x.field();
    std::ostringstream os;
    bool first = true;
    for (std::int64_t j = x.val(); j < x.prec(); ++j) {
        FqElem c = x.coeff(j);
        if (F.is_zero(c)) continue;
        if (!first) os << " + ";
        first = false;
        const std::string mono = monomial_text(j);
        if (mono.empty()) {
            os << render_elem(F, c);
        } else if (F.is_one(c)) {
            os << mono;
        } else {
            os << render_elem(F, c) << "*" << mono;
        }
    }
    return os.str();
}

} // namespace

std::string render_elem(const Fq& F, const FqElem& c) {
    if (F.ext_degree() == 1) return std::to_string(c.at(0));
    std::ostringstream os;
    os << "[";
    for (std::size_t t = 0; t < c.size(); ++t) {
        if (t) os << ",";
        os << c[t];
    }
    os << "]";
    return os.str();
}

std::string render_series(const LaurentSeries& x) {
    std::string terms = x.is_zero() ? "" : render_terms(x);
    std::string tail = "O(u^" + std::to_string(x.prec()) + ")";
    if (terms.empty()) return tail;
    return terms + " + " + tail;
}

std::string render_polynomial(const LaurentSeries& x) {
    if (x.is_zero()) return "0";
    std::string terms = render_terms(x);
    return terms.empty() ? "0" : terms;
}

nlohmann::ordered_json field_to_json(const Fq& F) {
    return nlohmann::ordered_json{{"p", F.p()}, {"e", F.ext_degree()}, {"modulus", F.modulus()}};
}

nlohmann::ordered_json series_to_json(const LaurentSeries& x) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    if (!x.is_zero())
        for (std::int64_t j = x.val(); j < x.prec(); ++j) coeffs.push_back(x.coeff(j));
    return nlohmann::ordered_json{{"val", x.val()}, {"prec", x.prec()}, {"coeffs", std::move(coeffs)}};
}

Fq field_from_json(const nlohmann::json& j) {
    return Fq::make(j.at("p").get<std::uint32_t>(), j.at("e").get<std::uint32_t>(),
                    j.at("modulus").get<std::vector<std::uint32_t>>());
}

LaurentSeries series_from_json(const Fq& F, const nlohmann::json& j) {
    const std::int64_t val = j.at("val").get<std::int64_t>();
    const std::int64_t prec = j.at("prec").get<std::int64_t>();
    std::vector<FqElem> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(c.get<FqElem>());
    if (coeffs.empty()) {
        if (val != prec) fail(Err::BadPrecision, "zero series must have val == prec");
        return LaurentSeries::zero(F, prec);
    }
    return LaurentSeries::make(F, val, coeffs, prec);
}

Fq parse_field_spec(const std::string& text) {
    const std::string s = strip(text);
    std::string head = s;
    std::vector<std::uint32_t> modulus;
    if (auto colon = s.find(':'); colon != std::string::npos) {
        head = s.substr(0, colon);
        for (const auto& part : split_top_commas(s.substr(colon + 1)))
            modulus.push_back(std::uint32_t(parse_int(part)));
    }
    std::uint32_t p = 0, e = 1;
    if (auto caret = head.find('^'); caret != std::string::npos) {
        p = std::uint32_t(parse_int(head.substr(0, caret)));
        e = std::uint32_t(parse_int(head.substr(caret + 1)));
    } else {
        // bare integer: a prime, or a prime power to factor
        std::int64_t n = parse_int(head);
        if (n < 2) fail(Err::NonPrimeP, "field order must be >= 2");
        std::int64_t base = 2;
        while (base * base <= n && n % base != 0) ++base;
        if (base * base > n) base = n; // n itself prime
        std::int64_t rest = n;
        e = 0;
        while (rest % base == 0) {
            rest /= base;
            ++e;
        }
        if (rest != 1) fail(Err::NonPrimeP, "'" + head + "' is not a prime power");
        p = std::uint32_t(base);
    }
    return Fq::make(p, e, std::move(modulus));
}

LaurentSeries parse_poly(const Fq& F, const std::string& text, std::int64_t N) {
    const std::string s = strip(text);
    if (s.empty()) fail(Err::Unsupported, "empty polynomial");

    if (s.find('T') == std::string::npos) {
        // comma form c_m,...,c_0
        std::vector<FqElem> high_to_low;
        for (const auto& part : split_top_commas(s)) high_to_low.push_back(parse_elem(F, part));
        return LaurentSeries::from_t_coeffs(F, high_to_low, N);
    }

    // sugar form: signed terms [coef]['*']T['^'exp]
    LaurentSeries acc = LaurentSeries::zero(F, N);
    std::size_t pos = 0;
    bool negate = false;
    if (s[0] == '+' || s[0] == '-') {
        negate = s[0] == '-';
        pos = 1;
    }
    while (pos < s.size()) {
        std::size_t end = pos;
        int depth = 0;
        bool seen_caret = false;
        for (; end < s.size(); ++end) {
            char c = s[end];
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (depth == 0 && (c == '+' || c == '-')) {
                // a sign directly after '^' belongs to the exponent
                if (!(seen_caret && end > 0 && s[end - 1] == '^')) break;
            }
            if (c == '^') seen_caret = true;
        }
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) fail(Err::Unsupported, "dangling sign in '" + text + "'");

        FqElem coef = F.one();
        std::int64_t texp = 0;
        if (auto tpos = term.find('T'); tpos != std::string::npos) {
            texp = 1;
            std::string head = term.substr(0, tpos);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!head.empty()) coef = parse_elem(F, head);
            std::string tail = term.substr(tpos + 1);
            if (!tail.empty()) {
                if (tail[0] != '^') fail(Err::Unsupported, "bad term '" + term + "'");
                texp = parse_int(tail.substr(1));
            }
        } else {
            coef = parse_elem(F, term);
        }
        if (negate) coef = F.neg(coef);
        acc = acc + LaurentSeries::monomial(F, coef, -texp, N);

        if (end < s.size()) {
            negate = s[end] == '-';
            pos = end + 1;
        } else {
            pos = end;
        }
    }
    return acc;
}

PadicInt parse_padic(std::uint32_t p, const std::string& text, std::size_t K) {
    const std::string s = strip(text);
    if (s.rfind("digits:", 0) == 0) {
        std::vector<std::uint32_t> digits;
        for (const auto& part : split_top_commas(s.substr(7))) {
            std::int64_t v = parse_int(part);
            if (v < 0 || std::uint64_t(v) >= p)
                fail(Err::Unsupported, "digit out of range [0, p)");
            digits.push_back(std::uint32_t(v));
        }
        if (digits.size() > K)
            fail(Err::BadPrecision, "more digits than the digit precision K");
        digits.resize(K, 0);
        return PadicInt::from_digits(p, std::move(digits));
    }
    return PadicInt::from_int(parse_int(s), p, K);
}

} // namespace gosszeta
