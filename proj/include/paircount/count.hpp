#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace paircount {

/// Exact nonnegative cardinality. Values grow like binomial coefficients and
/// leave the 64-bit range around n = 70.
using Count = boost::multiprecision::cpp_int;

/// C(a, b), with C(a, b) = 0 whenever b < 0, b > a or a < 0.
Count binomial(std::int64_t a, std::int64_t b);

/// Plain decimal rendering (no separators, no locale).
std::string to_decimal(const Count& value);

/// Parses a plain nonnegative decimal literal; throws DomainError otherwise.
Count parse_count(std::string_view text);

}  // namespace paircount
