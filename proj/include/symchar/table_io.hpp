#ifndef SYMCHAR_TABLE_IO_HPP
#define SYMCHAR_TABLE_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symchar/mn.hpp"

namespace symchar {

/// Bumped on any change to the cache layout. Files written under another
/// version are recomputed, never migrated.
inline constexpr int kCacheSchemaVersion = 1;

/// Unreadable or inconsistent cache file, or failure to write one.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Cache schema:
///   {"n": "<n>", "order": [[parts...], ...], "schema_version": 1,
///    "values": ["<decimal>", ...]}      (row-major, rows = characters)
/// Output is byte-for-byte deterministic and ends with a newline.
std::string table_to_json(const CharTable& table);

/// Parses and validates a cache document: schema, n, canonical order, value
/// count and decimal syntax. Throws CacheError describing the first problem.
CharTable table_from_json(std::string_view text);

/// Version recorded in a cache document, or -1 when absent or unreadable.
int cached_schema_version(std::string_view text);

/// Header row of class partitions, first column of character partitions,
/// partitions rendered with '.' between parts.
std::string table_to_csv(const CharTable& table);
std::string table_to_pretty(const CharTable& table);

std::filesystem::path cache_file(const std::filesystem::path& cache_dir, int n);

struct CacheLookup {
    CharTable table;
    bool hit = false;
};

/// Reads <cache_dir>/chartable_v<schema>_<n>.json when present, otherwise
/// computes the table and writes that file. A file from another schema
/// version is recomputed and overwritten; a corrupt file raises CacheError.
CacheLookup load_or_build_table(int n, const std::filesystem::path& cache_dir,
                                const TableOptions& options = {});

}  // namespace symchar

#endif  // SYMCHAR_TABLE_IO_HPP
