#pragma once

#include <string>
#include <vector>

#include "paircount/bit_string.hpp"

namespace paircount {

/// Length together with the number of adjacent 0-pairs (k) and 1-pairs (m).
struct PairProfile {
    int n = 0;
    int k = 0;
    int m = 0;

    friend bool operator==(const PairProfile&, const PairProfile&) = default;
};

enum class SDLetter : char { Same = 'S', Different = 'D' };

/// One letter per adjacent pair of a string: S where the bits agree, D where they differ.
class SDWord {
public:
    SDWord() = default;
    explicit SDWord(std::vector<SDLetter> letters) : letters_(std::move(letters)) {}

    const std::vector<SDLetter>& letters() const noexcept { return letters_; }
    std::size_t size() const noexcept { return letters_.size(); }
    int count_same() const;
    int count_different() const;
    std::string to_string() const;

    friend bool operator==(const SDWord&, const SDWord&) = default;

private:
    std::vector<SDLetter> letters_;
};

/// Pairs (i, i+1) for i in 0..n-2. Throws DomainError("empty input") on an empty string.
PairProfile linear_pair_counts(const BitString& b);

/// Pairs (i, i+1 mod n) for every i in 0..n-1. At n = 2 both orderings are
/// visited, so "00" reports k = 2.
PairProfile circular_pair_counts(const BitString& b);

SDWord sd_encode(const BitString& b);

/// True iff a string with linear profile (n, k, m) has equal first and last bits,
/// which happens exactly when n + k + m is odd.
bool wrap_parity_predicts_equal_ends(int n, int k, int m);

}  // namespace paircount
