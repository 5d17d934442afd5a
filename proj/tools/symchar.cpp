// symchar: batch front end for the symmetric-group character engine.
//
// Exit codes: 0 success, 1 verification failure or oracle mismatch,
// 2 invalid arguments, 3 I/O or cache failure, 4 brute force requested
// beyond --brute-force-limit.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "symchar/class_algebra.hpp"
#include "symchar/formulas.hpp"
#include "symchar/mn.hpp"
#include "symchar/reporting.hpp"
#include "symchar/table_io.hpp"
#include "symchar/vanishing.hpp"
#include "symchar/verify.hpp"

namespace {

using namespace symchar;

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3, kBeyondLimit = 4 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    std::string cache_dir;
    std::string workers = "1";
    int brute_force_limit = kDefaultBruteForceLimit;
    bool no_cache = false;
};

RunConfig make_config(const Globals& g, const std::string& format) {
    RunConfig cfg;
    cfg.cache_dir = g.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(g.cache_dir);
    try {
        cfg.workers = resolve_workers(g.workers);
        cfg.format = parse_format(format);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (g.brute_force_limit < 1) throw UsageError("--brute-force-limit must be positive");
    cfg.brute_force_limit = g.brute_force_limit;
    return cfg;
}

CharTable get_table(int n, const RunConfig& cfg, bool use_cache) {
    TableOptions opts{cfg.workers, nullptr};
    if (!use_cache) return character_table(n, opts);
    try {
        auto lookup = load_or_build_table(n, cfg.cache_dir, opts);
        std::clog << "symchar: table n=" << n << (lookup.hit ? " loaded from " : " computed, cached at ")
                  << cache_file(cfg.cache_dir, n).string() << "\n";
        return std::move(lookup.table);
    } catch (const CacheError& e) {
        throw IoError(e.what());
    } catch (const std::filesystem::filesystem_error& e) {
        throw IoError(e.what());
    }
}

Partition parse_arg(const std::string& text, const char* flag) {
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload << std::flush;
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + out_path + " for writing");
    out << payload;
    if (!out.flush()) throw IoError("write failed for " + out_path);
}

int cmd_chartable(const Globals& g, int n, const std::string& format, const std::string& out_path) {
    if (n < 1) throw UsageError("n must be >= 1");
    RunConfig cfg = make_config(g, format);
    CharTable table = get_table(n, cfg, !g.no_cache);
    switch (cfg.format) {
        case OutputFormat::Json: emit(table_to_json(table), out_path); break;
        case OutputFormat::Csv: emit(table_to_csv(table), out_path); break;
        case OutputFormat::Pretty: emit(table_to_pretty(table), out_path); break;
    }
    return kOk;
}

int cmd_eval(const std::string& lambda_text, const std::string& mu_text, const std::string& method) {
    const Partition lambda = parse_arg(lambda_text, "--lambda");
    const Partition mu = parse_arg(mu_text, "--mu");
    if (lambda.size() != mu.size()) {
        throw UsageError("--lambda and --mu are partitions of different sizes");
    }
    const int n = lambda.size();
    BigInt value;
    if (method == "mn") {
        value = mn_char(lambda, mu);
    } else if (method == "formula") {
        auto shape = shape_of(lambda);
        if (!shape) throw UsageError("(" + format_partition(lambda) + ") has no closed form here");
        value = near_hook_value(*shape, mu);
    } else if (method == "recursion") {
        if (is_hook(lambda)) {
            value = hook_char_recursive(static_cast<int>(lambda.length()) - 1, mu);
        } else if (lambda.length() == 2) {
            value = two_row_char_recursive(n - lambda[0], mu);
        } else {
            throw UsageError("recursion needs a hook or two-row shape, got (" + format_partition(lambda) + ")");
        }
    } else {
        throw UsageError("unknown method " + method);
    }
    std::cout << value.get_str() << "\n";
    return kOk;
}

int cmd_vanishing_pairs(const Globals& g, int n, const std::string& format, bool no_prune) {
    if (n < 1) throw UsageError("n must be >= 1");
    RunConfig cfg = make_config(g, format);
    CharTable table = get_table(n, cfg, !g.no_cache);
    CoveringPairReport report = find_covering_pairs(table, {.use_pruning = !no_prune, .workers = cfg.workers});
    switch (cfg.format) {
        case OutputFormat::Json: std::cout << report_to_json(report); break;
        case OutputFormat::Csv: std::cout << report_to_csv(report); break;
        case OutputFormat::Pretty: std::cout << report_to_pretty(report); break;
    }
    return kOk;
}

int cmd_structure_constant(const Globals& g, const std::string& mu_text, const std::string& nu_text,
                           const std::string& gamma_text, bool verify) {
    const Partition mu = parse_arg(mu_text, "--mu");
    const Partition nu = parse_arg(nu_text, "--nu");
    const Partition gamma = parse_arg(gamma_text, "--gamma");
    if (mu.size() != nu.size() || mu.size() != gamma.size()) {
        throw UsageError("--mu, --nu and --gamma must be partitions of the same n");
    }
    RunConfig cfg = make_config(g, "pretty");
    const int n = mu.size();
    if (verify && n > cfg.brute_force_limit) {
        std::cerr << "symchar: error: --verify needs n <= " << cfg.brute_force_limit << " (got n=" << n
                  << "); raise --brute-force-limit\n";
        return kBeyondLimit;
    }
    CharTable table = get_table(n, cfg, !g.no_cache);
    BigInt value = structure_constant(mu, nu, gamma, table);
    if (!verify) {
        std::cout << value.get_str() << "\n";
        return kOk;
    }
    BigInt brute = structure_constant_bruteforce(
        mu, nu, gamma, {.limit = cfg.brute_force_limit, .workers = cfg.workers});
    if (brute != value) {
        std::cerr << "symchar: mismatch: character sum " << value.get_str() << ", enumeration "
                  << brute.get_str() << "\n";
        return kFailed;
    }
    std::cout << value.get_str() << "\n" << brute.get_str() << "\n";
    return kOk;
}

int cmd_verify(const Globals& g, const std::string& suite_text, int n_min, int n_max) {
    Suite suite;
    try {
        suite = parse_suite(suite_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (n_min < 1 || n_min > n_max) throw UsageError("need 1 <= n-min <= n-max");
    RunConfig cfg = make_config(g, "pretty");
    SuiteOptions opts;
    opts.brute_force = {.limit = cfg.brute_force_limit, .workers = cfg.workers};
    bool all_passed = true;
    auto results = run_suite(
        suite, n_min, n_max, [&](int n) { return get_table(n, cfg, !g.no_cache); }, opts,
        [&](const CheckResult& r) {
            all_passed = all_passed && r.passed;
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  (" << std::fixed
                      << std::setprecision(3) << r.seconds << " s)";
            if (!r.passed) std::cout << "  " << r.detail;
            std::cout << "\n" << std::flush;
        });
    std::cout << results.size() << " checks, " << (all_passed ? "all passed" : "FAILURES") << "\n";
    return all_passed ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact character theory of the symmetric groups"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--cache-dir", g.cache_dir, "Table cache directory (default $SYMCHAR_CACHE or ./.symchar-cache)");
    app.add_option("--workers", g.workers, "Worker threads, a positive integer or \"auto\"");
    app.add_option("--brute-force-limit", g.brute_force_limit, "Largest n for exhaustive enumeration");
    app.add_flag("--no-cache", g.no_cache, "Neither read nor write the table cache");

    int n = 0;
    std::string format = "pretty";
    std::string out_path;
    auto* chartable = app.add_subcommand("chartable", "Print the character table of S_n");
    chartable->add_option("n", n, "Degree n")->required();
    chartable->add_option("--format", format, "pretty, json or csv");
    chartable->add_option("--out", out_path, "Write to this file instead of stdout");

    std::string lambda_text, mu_text, nu_text, gamma_text, method = "mn";
    auto* eval = app.add_subcommand("eval", "Evaluate chi_lambda on the class mu");
    eval->add_option("--lambda", lambda_text, "Character partition, e.g. 6,1")->required();
    eval->add_option("--mu", mu_text, "Class partition, e.g. 7 or 5,1^2")->required();
    eval->add_option("--method", method, "mn, formula or recursion")
        ->check(CLI::IsMember({"mn", "formula", "recursion"}));

    bool no_prune = false;
    auto* pairs = app.add_subcommand("vanishing-pairs", "Find class pairs covering all non-linear characters");
    pairs->add_option("n", n, "Degree n")->required();
    pairs->add_option("--format", format, "pretty, json or csv");
    pairs->add_flag("--no-prune", no_prune, "Check every pair against the table");

    bool verify_flag = false;
    auto* sc = app.add_subcommand("structure-constant", "Class algebra coefficient a_{mu nu}^gamma");
    sc->add_option("--mu", mu_text)->required();
    sc->add_option("--nu", nu_text)->required();
    sc->add_option("--gamma", gamma_text)->required();
    sc->add_flag("--verify", verify_flag, "Also count by brute-force enumeration");

    std::string suite = "all";
    int n_min = 1;
    int n_max = 12;
    auto* verify = app.add_subcommand("verify", "Run invariant suites over a range of n");
    verify->add_option("--suite", suite, "theorem, orthogonality, formulas, structure or all");
    verify->add_option("--n-min", n_min);
    verify->add_option("--n-max", n_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*chartable) return cmd_chartable(g, n, format, out_path);
        if (*eval) return cmd_eval(lambda_text, mu_text, method);
        if (*pairs) return cmd_vanishing_pairs(g, n, format, no_prune);
        if (*sc) return cmd_structure_constant(g, mu_text, nu_text, gamma_text, verify_flag);
        if (*verify) return cmd_verify(g, suite, n_min, n_max);
    } catch (const UsageError& e) {
        std::cerr << "symchar: error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "symchar: I/O error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "symchar: error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
