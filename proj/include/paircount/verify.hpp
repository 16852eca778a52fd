#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string_view>
#include <string>
#include <vector>

#include "paircount/count.hpp"
#include "paircount/memo_cache.hpp"
#include "paircount/oracle.hpp"
#include "paircount/tables.hpp"

namespace paircount {

enum class VerifyMode { Linear, Circular, Both };

struct Mismatch {
    int n = 0;
    int k = 0;
    int m = 0;
    std::string method;
    Count got;
    Count expected;

    friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
    int max_n = 0;
    VerifyMode mode = VerifyMode::Both;
    std::vector<std::string> methods;
    std::size_t cases = 0;  // individual comparisons performed
    std::vector<Mismatch> mismatches;  // sorted by (n, k, m, method)
    std::chrono::duration<double> elapsed{};

    bool success() const noexcept { return mismatches.empty(); }
    std::string summary() const;
};

/// A named z route under test. `evaluate` gets a cache shared across the run.
struct NamedMethod {
    std::string name;
    std::function<Count(int n, int k, int m, MemoCache& cache)> evaluate;
};

/// split, first-one, reduce, auto.
std::vector<NamedMethod> standard_methods();

/// Cross-checks every (n, k, m) with 0 <= k, m <= n for n up to max_n.
/// Linear mode: each method against z_oracle, the m = 0 closed form, the
/// z(n,0,m) = z(n-1,m,0) identity and the end-bit parity rule over every string.
/// Circular mode: s_circular against s_circular_oracle, and zero on odd n + k + m.
VerifyReport verify_all(int max_n, VerifyMode mode, const std::vector<NamedMethod>& methods = standard_methods(),
                        int oracle_limit = kDefaultOracleLimit);

std::optional<VerifyMode> parse_verify_mode(std::string_view name);

}  // namespace paircount
