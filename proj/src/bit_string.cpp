#include "paircount/bit_string.hpp"

#include <algorithm>

#include "paircount/error.hpp"

namespace paircount {

BitString BitString::parse(std::string_view text) {
    BitString out;
    out.bits_.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw DomainError("bit string may only contain '0' and '1': '" + std::string(text) + "'");
        }
        out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return out;
}

BitString BitString::from_mask(int n, std::uint64_t mask) {
    if (n < 0 || n > 64) throw DomainError("mask length must lie in 0..64");
    BitString out;
    out.bits_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.bits_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((mask >> (n - 1 - i)) & 1U);
    }
    return out;
}

BitString BitString::from_bits(std::vector<std::uint8_t> bits) {
    for (auto b : bits) {
        if (b > 1) throw DomainError("bit values must be 0 or 1");
    }
    BitString out;
    out.bits_ = std::move(bits);
    return out;
}

std::string BitString::to_string() const {
    std::string s(bits_.size(), '0');
    std::transform(bits_.begin(), bits_.end(), s.begin(), [](std::uint8_t b) { return static_cast<char>('0' + b); });
    return s;
}

BitString BitString::rotated(std::size_t shift) const {
    BitString out = *this;
    if (!bits_.empty()) {
        std::rotate(out.bits_.begin(), out.bits_.begin() + static_cast<std::ptrdiff_t>(shift % bits_.size()),
                    out.bits_.end());
    }
    return out;
}

}  // namespace paircount
