#ifndef SYMCHAR_REPORTING_HPP
#define SYMCHAR_REPORTING_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "symchar/vanishing.hpp"

namespace symchar {

enum class OutputFormat { Pretty, Json, Csv };

/// Throws std::invalid_argument unless text is pretty, json or csv.
OutputFormat parse_format(std::string_view text);

struct RunConfig {
    std::filesystem::path cache_dir = ".symchar-cache";
    unsigned workers = 1;
    OutputFormat format = OutputFormat::Pretty;
    int brute_force_limit = 8;
};

/// $SYMCHAR_CACHE if set and non-empty, else ./.symchar-cache.
std::filesystem::path default_cache_dir();

/// "auto" -> hardware concurrency (at least 1); otherwise a positive
/// integer. Throws std::invalid_argument.
unsigned resolve_workers(std::string_view text);

/// {"degenerate": [bool...], "k_value": "<k>"|null, "matches_theorem": bool|null,
///  "n": "<n>", "pairs": [[[parts], [parts]], ...],
///  "pruning_stats": {"examined": "...", "merge_pruned": "...",
///                    "parity_pruned": "...", "table_checked": "..."},
///  "vacuous": bool}
std::string report_to_json(const CoveringPairReport& report);
/// Inverse of report_to_json. Throws std::invalid_argument on bad input.
CoveringPairReport report_from_json(std::string_view text);
std::string report_to_csv(const CoveringPairReport& report);
std::string report_to_pretty(const CoveringPairReport& report);

}  // namespace symchar

#endif  // SYMCHAR_REPORTING_HPP
