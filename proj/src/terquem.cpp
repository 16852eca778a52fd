#include "paircount/terquem.hpp"

#include <charconv>
#include <stdexcept>

#include "paircount/error.hpp"
#include "paircount/profile.hpp"

namespace paircount {

std::optional<std::string> TerquemSequence::violation() const {
    if (positions.empty()) return std::nullopt;
    const int first_parity = start == StartParity::Odd ? 1 : 0;
    if (positions.front() % 2 != first_parity) {
        return start == StartParity::Odd ? "start parity: first element must be odd"
                                         : "start parity: first element must be even";
    }
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const int p = positions[i];
        if (p < 1 || p > universe_bound) {
            return "bound: element " + std::to_string(p) + " outside 1.." + std::to_string(universe_bound);
        }
        if (i == 0) continue;
        if (p <= positions[i - 1]) return "ordering: elements must be strictly increasing";
        if ((p - positions[i - 1]) % 2 == 0) return "alternation: consecutive elements must alternate parity";
    }
    return std::nullopt;
}

std::string TerquemSequence::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += std::to_string(positions[i]);
    }
    return out;
}

std::vector<int> parse_positions(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::size_t begin = 0;
    while (true) {
        const auto comma = text.find(',', begin);
        const auto end = comma == std::string::npos ? text.size() : comma;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + begin, text.data() + end, value);
        if (ec != std::errc{} || ptr != text.data() + end || begin == end) {
            throw DomainError("invalid Terquem sequence: cannot parse '" + text + "'");
        }
        out.push_back(value);
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return out;
}

TerquemSequence to_terquem(const BitString& b) {
    if (b.empty() || b.front() != 0 || linear_pair_counts(b).m != 0) throw DomainError("not in Z(n,k,0)");
    TerquemSequence t;
    t.universe_bound = static_cast<int>(b.size()) - 1;
    t.start = StartParity::Odd;
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        if (b.bit(i) == 0 && b.bit(i + 1) == 0) t.positions.push_back(static_cast<int>(i) + 1);
    }
    return t;
}

BitString from_terquem(const TerquemSequence& t, int n) {
    if (n < 1) throw DomainError("invalid Terquem sequence: string length must be at least 1");
    TerquemSequence checked{t.positions, n - 1, StartParity::Odd};
    if (auto why = checked.violation()) throw DomainError("invalid Terquem sequence: " + *why);

    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n), 0);
    auto next = t.positions.begin();
    for (int pos = 1; pos < n; ++pos) {
        const auto prev = bits[static_cast<std::size_t>(pos - 1)];
        const bool same = next != t.positions.end() && *next == pos;
        if (same) ++next;
        bits[static_cast<std::size_t>(pos)] = same ? prev : static_cast<std::uint8_t>(prev ^ 1U);
    }
    auto b = BitString::from_bits(std::move(bits));
    if (linear_pair_counts(b).m != 0) throw std::logic_error("from_terquem produced a 1-pair");
    return b;
}

namespace {

void extend(std::vector<int>& prefix, int k, int bound, int first, std::vector<TerquemSequence>& out,
            StartParity start) {
    if (static_cast<int>(prefix.size()) == k) {
        out.push_back(TerquemSequence{prefix, bound, start});
        return;
    }
    for (int p = first; p <= bound; p += 2) {
        prefix.push_back(p);
        extend(prefix, k, bound, p + 1, out, start);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<TerquemSequence> enumerate_terquem(int universe_bound, int k, StartParity start) {
    if (universe_bound < 0 || k < 0) throw DomainError("enumerate_terquem requires nonnegative arguments");
    std::vector<TerquemSequence> out;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(k));
    extend(prefix, k, universe_bound, start == StartParity::Odd ? 1 : 2, out, start);
    return out;
}

}  // namespace paircount
