#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace paircount {

/// A finite bit sequence. Index 0 is the leftmost character of the text form,
/// which is position 1 in the 1-indexed Terquem convention.
class BitString {
public:
    BitString() = default;

    /// Parses a run of '0'/'1' characters; anything else throws DomainError.
    static BitString parse(std::string_view text);

    /// The n-bit string whose first bit is the most significant bit of `mask`.
    /// With this convention numeric order of masks is lexicographic order of text.
    static BitString from_mask(int n, std::uint64_t mask);

    static BitString from_bits(std::vector<std::uint8_t> bits);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_.at(i); }
    int front() const { return bits_.front(); }
    int back() const { return bits_.back(); }

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    std::string to_string() const;

    /// Rotates left by `shift` positions (the bit at `shift` becomes first).
    BitString rotated(std::size_t shift) const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

}  // namespace paircount
