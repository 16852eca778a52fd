#include "paircount/verify.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "paircount/bit_string.hpp"
#include "paircount/counting.hpp"
#include "paircount/error.hpp"
#include "paircount/profile.hpp"

namespace paircount {

namespace {

class Checker {
public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    void expect(int n, int k, int m, const std::string& method, Count got, const Count& expected) {
        ++report_.cases;
        if (got != expected) report_.mismatches.push_back(Mismatch{n, k, m, method, std::move(got), expected});
    }

private:
    VerifyReport& report_;
};

void verify_linear(int max_n, const std::vector<NamedMethod>& methods, int oracle_limit, Checker& check) {
    MemoCache cache;
    for (int n = 1; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int m = 0; m <= n; ++m) {
                const Count truth = z_oracle(n, k, m, oracle_limit);
                for (const auto& method : methods) check.expect(n, k, m, method.name, method.evaluate(n, k, m, cache), truth);
                if (m == 0) check.expect(n, k, 0, "closed", z_closed_m0(n, k), truth);
            }
        }
        for (int m = 0; m < n - 1; ++m) {
            check.expect(n, 0, m, "corollary", z_oracle(n, 0, m, oracle_limit), z_oracle(n - 1, m, 0, oracle_limit));
        }

        // End-bit parity over every string of length n; one tally per profile.
        ProfileHistogram exceptions(n);
        ProfileHistogram seen(n);
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            const auto b = BitString::from_mask(n, mask);
            const auto p = linear_pair_counts(b);
            seen.add(p.k, p.m);
            const bool ends_equal = b.front() == b.back();
            const bool even_d = sd_encode(b).count_different() % 2 == 0;
            if (ends_equal != wrap_parity_predicts_equal_ends(n, p.k, p.m) || ends_equal != even_d) {
                exceptions.add(p.k, p.m);
            }
        }
        for (int k = 0; k <= n; ++k) {
            for (int m = 0; m <= n; ++m) {
                if (seen.at(k, m) == 0) continue;
                check.expect(n, k, m, "end-parity", Count(exceptions.at(k, m)), Count(0));
            }
        }
    }
}

void verify_circular(int max_n, int oracle_limit, Checker& check) {
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (int m = 0; m <= n; ++m) {
                const Count got = s_circular(n, k, m);
                check.expect(n, k, m, "circular", got, s_circular_oracle(n, k, m, oracle_limit));
                if (((n + k + m) & 1) != 0) check.expect(n, k, m, "circular-parity", got, Count(0));
            }
        }
    }
}

}  // namespace

std::vector<NamedMethod> standard_methods() {
    return {
        {"split", [](int n, int k, int m, MemoCache& c) { return z_recur_split(n, k, m, c); }},
        {"first-one", [](int n, int k, int m, MemoCache& c) { return z_recur_firstone(n, k, m, c); }},
        {"reduce", [](int n, int k, int m, MemoCache&) { return z_reduce_to_m0(n, k, m); }},
        {"auto", [](int n, int k, int m, MemoCache&) { return z_auto(n, k, m); }},
    };
}

VerifyReport verify_all(int max_n, VerifyMode mode, const std::vector<NamedMethod>& methods, int oracle_limit) {
    if (max_n < 2) throw DomainError("verify requires max_n >= 2");
    check_oracle_range(max_n, 2, oracle_limit);

    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.max_n = max_n;
    report.mode = mode;
    Checker check(report);

    if (mode != VerifyMode::Circular) {
        for (const auto& method : methods) report.methods.push_back(method.name);
        report.methods.insert(report.methods.end(), {"closed", "corollary", "end-parity"});
        verify_linear(max_n, methods, oracle_limit, check);
    }
    if (mode != VerifyMode::Linear) {
        report.methods.insert(report.methods.end(), {"circular", "circular-parity"});
        verify_circular(max_n, oracle_limit, check);
    }

    std::sort(report.mismatches.begin(), report.mismatches.end(), [](const Mismatch& a, const Mismatch& b) {
        return std::tie(a.n, a.k, a.m, a.method) < std::tie(b.n, b.k, b.m, b.method);
    });
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::string VerifyReport::summary() const {
    std::ostringstream out;
    const char* mode_name = mode == VerifyMode::Linear ? "linear" : mode == VerifyMode::Circular ? "circular" : "both";
    out << "verify max_n=" << max_n << " mode=" << mode_name << " methods=";
    for (std::size_t i = 0; i < methods.size(); ++i) out << (i ? "," : "") << methods[i];
    out << " cases=" << cases << " mismatches=" << mismatches.size() << " elapsed=" << elapsed.count() << "s\n";
    for (const auto& x : mismatches) {
        out << "MISMATCH n=" << x.n << " k=" << x.k << " m=" << x.m << " method=" << x.method
            << " got=" << to_decimal(x.got) << " expected=" << to_decimal(x.expected) << '\n';
    }
    out << (success() ? "OK" : "FAILED") << '\n';
    return out.str();
}

std::optional<VerifyMode> parse_verify_mode(std::string_view name) {
    if (name == "linear") return VerifyMode::Linear;
    if (name == "circular") return VerifyMode::Circular;
    if (name == "both") return VerifyMode::Both;
    return std::nullopt;
}

}  // namespace paircount
