#include "paircount/count.hpp"

#include <algorithm>

#include "paircount/error.hpp"

namespace paircount {

Count binomial(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Count result = 1;
    // Each partial product is itself C(a - b + i + 1, i + 1), so the division is exact.
    for (std::int64_t i = 0; i < b; ++i) {
        result *= a - b + i + 1;
        result /= i + 1;
    }
    return result;
}

std::string to_decimal(const Count& value) { return value.str(); }

Count parse_count(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw DomainError("not a nonnegative decimal integer: '" + std::string(text) + "'");
    }
    return Count(std::string(text));
}

}  // namespace paircount
