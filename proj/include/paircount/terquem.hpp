#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paircount/bit_string.hpp"

namespace paircount {

enum class StartParity { Odd, Even };

/// Strictly increasing, parity-alternating sequence drawn from 1..universe_bound.
/// Positions are 1-indexed; BitString indices are 0-indexed.
struct TerquemSequence {
    std::vector<int> positions;
    int universe_bound = 0;
    StartParity start = StartParity::Odd;

    /// Name of the first violated constraint, or std::nullopt when valid.
    std::optional<std::string> violation() const;

    std::string to_string() const;  // comma separated, empty for ()

    friend bool operator==(const TerquemSequence&, const TerquemSequence&) = default;
};

/// Parses "1,6,7" (or an empty string) into positions; throws DomainError on junk.
std::vector<int> parse_positions(const std::string& text);

/// Positions of the first 0 of every 0-pair in a member of Z(n, k, 0).
/// Throws DomainError("not in Z(n,k,0)") if b starts with 1 or has a 1-pair.
TerquemSequence to_terquem(const BitString& b);

/// The unique member b of Z(n, k, 0) with to_terquem(b) == t: copy the previous
/// bit at each listed position and flip it everywhere else.
BitString from_terquem(const TerquemSequence& t, int n);

/// Every valid sequence of length k over 1..universe_bound, lexicographic.
std::vector<TerquemSequence> enumerate_terquem(int universe_bound, int k, StartParity start);

}  // namespace paircount
