#include "paircount/profile.hpp"

#include <algorithm>

#include "paircount/error.hpp"

namespace paircount {

int SDWord::count_same() const {
    return static_cast<int>(std::count(letters_.begin(), letters_.end(), SDLetter::Same));
}

int SDWord::count_different() const { return static_cast<int>(letters_.size()) - count_same(); }

std::string SDWord::to_string() const {
    std::string s;
    s.reserve(letters_.size());
    for (auto l : letters_) s.push_back(static_cast<char>(l));
    return s;
}

PairProfile linear_pair_counts(const BitString& b) {
    if (b.empty()) throw DomainError("empty input");
    const auto& bits = b.bits();
    PairProfile p{static_cast<int>(bits.size()), 0, 0};
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
        if (bits[i] != bits[i + 1]) continue;
        (bits[i] == 0 ? p.k : p.m) += 1;
    }
    return p;
}

PairProfile circular_pair_counts(const BitString& b) {
    if (b.size() < 2) throw DomainError("circular adjacency undefined below length 2");
    const auto& bits = b.bits();
    const std::size_t n = bits.size();
    PairProfile p{static_cast<int>(n), 0, 0};
    for (std::size_t i = 0; i < n; ++i) {
        const auto a = bits[i];
        if (a != bits[(i + 1) % n]) continue;
        (a == 0 ? p.k : p.m) += 1;
    }
    return p;
}

SDWord sd_encode(const BitString& b) {
    if (b.empty()) throw DomainError("empty input");
    const auto& bits = b.bits();
    std::vector<SDLetter> letters;
    letters.reserve(bits.size() - 1);
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
        letters.push_back(bits[i] == bits[i + 1] ? SDLetter::Same : SDLetter::Different);
    }
    return SDWord(std::move(letters));
}

bool wrap_parity_predicts_equal_ends(int n, int k, int m) { return ((n + k + m) & 1) != 0; }

}  // namespace paircount
