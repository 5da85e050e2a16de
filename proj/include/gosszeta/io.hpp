#pragma once

#include <string>

#include <json.hpp>

#include "gosszeta/laurent.hpp"
#include "gosszeta/padic.hpp"

namespace gosszeta {

/// "[d0,d1,...]" for extension fields, plain decimal for prime fields.
std::string render_elem(const Fq& F, const FqElem& c);

/// Terms in ascending u-exponent with negative exponents printed as powers
/// of T, closed by the precision tail: "2*T^2 + T + u^3 + O(u^8)".
std::string render_series(const LaurentSeries& x);

/// Same term syntax without the O() tail; for exact polynomial values.
/// The zero polynomial renders as "0".
std::string render_polynomial(const LaurentSeries& x);

nlohmann::ordered_json field_to_json(const Fq& F);
nlohmann::ordered_json series_to_json(const LaurentSeries& x);

Fq field_from_json(const nlohmann::json& j);
LaurentSeries series_from_json(const Fq& F, const nlohmann::json& j);

/// Accepts "p^e", "p^e:c0,c1,...,ce" (modulus low-to-high) or a bare prime
/// power such as "4" or "9".
Fq parse_field_spec(const std::string& text);

/// Polynomial syntax: either the sugar form "T^2+T+1", "2*T^2", "[0,1]T+1"
/// (exponents may be negative), or the comma form "c_m,...,c_0" listing
/// coefficients of T^m..T^0. Coefficients are integers or bracketed digit
/// vectors for extension fields. Returns a series at precision N.
LaurentSeries parse_poly(const Fq& F, const std::string& text, std::int64_t N);

/// A p-adic exponent: a decimal integer (negative allowed) or an explicit
/// digit list "digits:d0,d1,...". Shorter digit lists are zero-padded to K.
PadicInt parse_padic(std::uint32_t p, const std::string& text, std::size_t K);

} // namespace gosszeta
