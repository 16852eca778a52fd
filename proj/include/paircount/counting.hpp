#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "paircount/count.hpp"
#include "paircount/memo_cache.hpp"

namespace paircount {

// z(n, k, m) is the number of length-n strings that start with 0 and have
// exactly k adjacent 0-pairs and m adjacent 1-pairs (no wraparound).

/// Boundary layer shared by every route. Yields a value when (n, k, m) is
/// settled without recursion, std::nullopt when k + m < n - 1 and n >= 2.
std::optional<Count> z_base_case(int n, int k, int m);

/// First-two-bits split: 00..., 010..., 011...
Count z_recur_split(int n, int k, int m, MemoCache& cache);
Count z_recur_split(int n, int k, int m);

/// Split on the position of the first 1.
Count z_recur_firstone(int n, int k, int m, MemoCache& cache);
Count z_recur_firstone(int n, int k, int m);

/// Reduction of m > 0 to m = 0 values by deleting every run of two or more 1s.
Count z_reduce_to_m0(int n, int k, int m);

/// z(n, k, 0) = C(floor((n + k - 1) / 2), k) for n >= 1, 0 <= k <= n - 1; zero elsewhere.
Count z_closed_m0(int n, int k);

/// Triangle C(floor((n + k) / 2), k). Throws DomainError for negative n or k.
Count terquem_T(int n, int k);

/// Base case, then the closed form when m = 0, otherwise the m = 0 reduction.
Count z_auto(int n, int k, int m);

using ZFunction = std::function<Count(int n, int k, int m)>;

/// Number of length-n strings (either first bit) with k 0-pairs and m 1-pairs
/// under wraparound adjacency. Zero when n + k + m is odd. Throws for n < 2.
Count s_circular(int n, int k, int m);

/// Same case formula with every z term supplied by `z`.
Count s_circular_with(int n, int k, int m, const ZFunction& z);

enum class ZMethod { Oracle, Split, FirstOne, Reduce, Closed, Auto };

std::string_view method_name(ZMethod method);
/// Accepts oracle, split, first-one, reduce, closed, auto.
std::optional<ZMethod> parse_method(std::string_view name);

}  // namespace paircount
