#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace perco {

/// Exact rational scalar. Expression templates are off so the type composes
/// cleanly with Eigen containers.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses "3/10", "7", "0.35" or "1e-2". Decimals become k/10^d exactly.
/// Throws perco::Error(Kind::Input) on malformed text.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

}  // namespace perco
