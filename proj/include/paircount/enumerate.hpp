#pragma once

#include <vector>

#include "paircount/bit_string.hpp"
#include "paircount/oracle.hpp"

namespace paircount {

/// Members of Z(n, k, m) in lexicographic order. Requires 1 <= n <= oracle_limit.
std::vector<BitString> enumerate_Z(int n, int k, int m, int oracle_limit = kDefaultOracleLimit);

/// All strings with wraparound profile (n, k, m), lexicographic. Requires 2 <= n <= oracle_limit.
std::vector<BitString> enumerate_circular(int n, int k, int m, int oracle_limit = kDefaultOracleLimit);

/// Flips every bit. An involution that swaps the k and m of both profiles.
BitString invert_bits(const BitString& b);

}  // namespace paircount
