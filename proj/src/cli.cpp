#include "paircount/cli.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "paircount/counting.hpp"
#include "paircount/enumerate.hpp"
#include "paircount/error.hpp"
#include "paircount/oracle.hpp"
#include "paircount/tables.hpp"
#include "paircount/terquem.hpp"
#include "paircount/verify.hpp"

namespace paircount::cli {

namespace {

struct CliConfig {
    int n = 0;
    int k = 0;
    int m = 0;
    int rows = 0;
    int max_n = 0;
    bool circular = false;
    std::string method = "auto";
    std::string format = "csv";
    std::string mode = "both";
    std::string out_path;
    std::string bit_string;
    std::optional<std::string> sequence;
    std::optional<int> oracle_limit;
};

int resolve_oracle_limit(const CliConfig& cfg) {
    if (cfg.oracle_limit) return *cfg.oracle_limit;
    if (const char* env = std::getenv(kOracleLimitEnv); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (*end != '\0' || value < 1 || value > kMaxOracleLimit) {
            throw DomainError(std::string(kOracleLimitEnv) + " must be an integer in 1.." +
                              std::to_string(kMaxOracleLimit));
        }
        return static_cast<int>(value);
    }
    return kDefaultOracleLimit;
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw DomainError("cannot open output file '" + cfg.out_path + "'");
    file << text;
    if (!file) throw DomainError("failed writing output file '" + cfg.out_path + "'");
}

ZFunction z_for(ZMethod method, int oracle_limit, MemoCache& cache) {
    switch (method) {
        case ZMethod::Oracle: return [oracle_limit](int n, int k, int m) { return z_oracle(n, k, m, oracle_limit); };
        case ZMethod::Split: return [&cache](int n, int k, int m) { return z_recur_split(n, k, m, cache); };
        case ZMethod::FirstOne: return [&cache](int n, int k, int m) { return z_recur_firstone(n, k, m, cache); };
        case ZMethod::Reduce: return [](int n, int k, int m) { return z_reduce_to_m0(n, k, m); };
        case ZMethod::Closed:
            return [](int n, int k, int m) {
                if (m != 0) throw DomainError("closed form covers m = 0 only");
                return z_closed_m0(n, k);
            };
        case ZMethod::Auto: return [](int n, int k, int m) { return z_auto(n, k, m); };
    }
    throw DomainError("unknown method");
}

Count run_count(const CliConfig& cfg) {
    const auto method = parse_method(cfg.method);
    if (!method) {
        throw DomainError("unknown method '" + cfg.method + "' (supported: oracle, split, first-one, reduce, closed, auto)");
    }
    const int limit = resolve_oracle_limit(cfg);
    if ((*method == ZMethod::Split || *method == ZMethod::FirstOne) && cfg.n > kRecurrenceLimit) {
        throw DomainError("recurrence methods support n <= " + std::to_string(kRecurrenceLimit));
    }
    if (cfg.circular) {
        if (*method == ZMethod::Oracle) return s_circular_oracle(cfg.n, cfg.k, cfg.m, limit);
        if (*method == ZMethod::Closed) throw DomainError("closed form covers linear m = 0 only");
        MemoCache cache;
        return s_circular_with(cfg.n, cfg.k, cfg.m, z_for(*method, limit, cache));
    }
    MemoCache cache;
    return z_for(*method, limit, cache)(cfg.n, cfg.k, cfg.m);
}

std::string run_bijection(const CliConfig& cfg, bool have_string, bool have_n) {
    if (have_string == cfg.sequence.has_value()) {
        throw DomainError("bijection needs exactly one of --string or --sequence");
    }
    if (have_string) return to_terquem(BitString::parse(cfg.bit_string)).to_string() + "\n";
    if (!have_n) throw DomainError("bijection --sequence requires --n");
    TerquemSequence t{parse_positions(*cfg.sequence), cfg.n - 1, StartParity::Odd};
    return from_terquem(t, cfg.n).to_string() + "\n";
}

std::string one_line(std::string text) {
    std::replace(text.begin(), text.end(), '\n', ' ');
    while (!text.empty() && text.back() == ' ') text.pop_back();
    return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of binary strings by adjacent 0-pairs and 1-pairs", "paircount"};
    app.require_subcommand(1, 1);
    CliConfig cfg;
    const auto nonneg = CLI::Range(0, INT_MAX);
    app.add_option("--oracle-limit", cfg.oracle_limit, "Largest n the brute-force oracle accepts")
        ->check(CLI::Range(1, kMaxOracleLimit));

    auto* count = app.add_subcommand("count", "Print one exact count");
    count->add_option("--n", cfg.n, "String length")->required()->check(nonneg);
    count->add_option("--k", cfg.k, "Number of 0-pairs")->required()->check(nonneg);
    count->add_option("--m", cfg.m, "Number of 1-pairs")->required()->check(nonneg);
    count->add_flag("--circular", cfg.circular, "Treat the first and last bits as adjacent");
    count->add_option("--method", cfg.method, "oracle|split|first-one|reduce|closed|auto");

    auto* table = app.add_subcommand("table", "Print every (k, m) count for one length");
    table->add_option("--n", cfg.n, "String length")->required()->check(nonneg);
    table->add_flag("--circular", cfg.circular, "Treat the first and last bits as adjacent");
    table->add_option("--format", cfg.format, "csv|tsv|json");
    table->add_option("--out", cfg.out_path, "Write to PATH instead of standard output");

    auto* triangle = app.add_subcommand("triangle", "Print rows of T(n,k) = C(floor((n+k)/2), k)");
    triangle->add_option("--rows", cfg.rows, "Number of rows")->required()->check(nonneg);
    triangle->add_option("--format", cfg.format, "csv|bfile");
    triangle->add_option("--out", cfg.out_path, "Write to PATH instead of standard output");

    auto* verify = app.add_subcommand("verify", "Cross-check every method against the oracles");
    verify->add_option("--max-n", cfg.max_n, "Largest length checked")->required()->check(nonneg);
    verify->add_option("--mode", cfg.mode, "linear|circular|both");

    auto* enumerate = app.add_subcommand("enumerate", "List matching strings in lexicographic order");
    enumerate->add_option("--n", cfg.n, "String length")->required()->check(nonneg);
    enumerate->add_option("--k", cfg.k, "Number of 0-pairs")->required()->check(nonneg);
    enumerate->add_option("--m", cfg.m, "Number of 1-pairs")->required()->check(nonneg);
    enumerate->add_flag("--circular", cfg.circular, "Treat the first and last bits as adjacent");

    auto* bijection = app.add_subcommand("bijection", "Map between Z(n,k,0) strings and Terquem sequences");
    auto* string_opt = bijection->add_option("--string", cfg.bit_string, "Bit string to map to positions");
    bijection->add_option("--sequence", cfg.sequence, "Comma-separated positions to map to a string");
    auto* n_opt = bijection->add_option("--n", cfg.n, "Length of the reconstructed string")->check(nonneg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }

    try {
        const int limit = resolve_oracle_limit(cfg);
        if (count->parsed()) {
            out << to_decimal(run_count(cfg)) << '\n';
        } else if (table->parsed()) {
            const auto format = require_table_format(cfg.format);
            emit(cfg, render_z_table(cfg.n, cfg.circular ? Adjacency::Circular : Adjacency::Linear, format), out);
        } else if (triangle->parsed()) {
            emit(cfg, render_terquem_triangle(cfg.rows, require_triangle_format(cfg.format)), out);
        } else if (verify->parsed()) {
            const auto mode = parse_verify_mode(cfg.mode);
            if (!mode) throw DomainError("unknown mode '" + cfg.mode + "' (supported: linear, circular, both)");
            const auto report = verify_all(cfg.max_n, *mode, standard_methods(), limit);
            out << report.summary();
            return report.success() ? kExitOk : kExitMismatch;
        } else if (enumerate->parsed()) {
            const auto strings = cfg.circular ? enumerate_circular(cfg.n, cfg.k, cfg.m, limit)
                                              : enumerate_Z(cfg.n, cfg.k, cfg.m, limit);
            for (const auto& s : strings) out << s.to_string() << '\n';
        } else if (bijection->parsed()) {
            out << run_bijection(cfg, string_opt->count() > 0, n_opt->count() > 0);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace paircount::cli
