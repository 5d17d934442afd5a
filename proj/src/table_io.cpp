#include "symchar/table_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace symchar {

using nlohmann::json;

namespace {

json partition_json(const Partition& p) { return json(p.parts()); }

bool is_decimal(const std::string& s) {
    std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw CacheError("read failed for " + path.string());
    return ss.str();
}

void write_file_atomically(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw CacheError("cannot create cache directory " + path.parent_path().string() +
                             ": " + ec.message());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw CacheError("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CacheError("cannot move " + tmp.string() + " into place: " + ec.message());
}

}  // namespace

std::string table_to_json(const CharTable& table) {
    json doc;
    doc["schema_version"] = kCacheSchemaVersion;
    doc["n"] = std::to_string(table.n());
    json order = json::array();
    for (const auto& p : table.order()) order.push_back(partition_json(p));
    doc["order"] = std::move(order);
    json values = json::array();
    for (const auto& v : table.values()) values.push_back(v.get_str());
    doc["values"] = std::move(values);
    return doc.dump() + "\n";
}

int cached_schema_version(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) return -1;
    auto it = doc.find("schema_version");
    if (it == doc.end() || !it->is_number_integer()) return -1;
    return it->get<int>();
}

CharTable table_from_json(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw CacheError("cache: not a JSON object");
    for (const char* field : {"schema_version", "n", "order", "values"}) {
        if (!doc.contains(field)) throw CacheError(std::string("cache: missing field \"") + field + "\"");
    }
    if (!doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != kCacheSchemaVersion) {
        throw CacheError("cache: schema_version is not " + std::to_string(kCacheSchemaVersion));
    }
    if (!doc["n"].is_string() || !is_decimal(doc["n"].get<std::string>())) {
        throw CacheError("cache: n must be a decimal string");
    }
    int n = std::stoi(doc["n"].get<std::string>());
    if (n < 1) throw CacheError("cache: n must be positive");

    std::vector<Partition> expected = partitions_of(n);
    const json& order = doc["order"];
    if (!order.is_array() || order.size() != expected.size()) {
        throw CacheError("cache: order has wrong length for n=" + std::to_string(n));
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        const json& entry = order[i];
        if (!entry.is_array() || !std::all_of(entry.begin(), entry.end(),
                                              [](const json& x) { return x.is_number_integer(); })) {
            throw CacheError("cache: order entry " + std::to_string(i) + " is not a list of integers");
        }
        if (entry.get<std::vector<int>>() != expected[i].parts()) {
            throw CacheError("cache: order entry " + std::to_string(i) +
                             " is not the canonical partition (" + format_partition(expected[i]) + ")");
        }
    }
    const json& values = doc["values"];
    if (!values.is_array() || values.size() != expected.size() * expected.size()) {
        throw CacheError("cache: expected " + std::to_string(expected.size() * expected.size()) +
                         " values");
    }
    std::vector<BigInt> cells;
    cells.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!values[i].is_string() || !is_decimal(values[i].get<std::string>())) {
            throw CacheError("cache: value " + std::to_string(i) + " is not a decimal string");
        }
        cells.emplace_back(values[i].get<std::string>(), 10);
    }
    return CharTable(n, std::move(expected), std::move(cells));
}

std::string table_to_csv(const CharTable& table) {
    std::string out = "chi";
    for (const auto& mu : table.order()) out += "," + format_partition(mu, '.');
    out += "\n";
    for (std::size_t r = 0; r < table.dim(); ++r) {
        out += format_partition(table.order()[r], '.');
        for (std::size_t c = 0; c < table.dim(); ++c) out += "," + table.at(r, c).get_str();
        out += "\n";
    }
    return out;
}

std::string table_to_pretty(const CharTable& table) {
    const std::size_t dim = table.dim();
    std::vector<std::string> col_head(dim);
    std::vector<std::size_t> width(dim + 1, 0);
    for (std::size_t c = 0; c < dim; ++c) {
        col_head[c] = "(" + format_partition(table.order()[c]) + ")";
        width[c + 1] = col_head[c].size();
    }
    std::vector<std::string> row_head(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        row_head[r] = "(" + format_partition(table.order()[r]) + ")";
        width[0] = std::max(width[0], row_head[r].size());
        for (std::size_t c = 0; c < dim; ++c) {
            width[c + 1] = std::max(width[c + 1], table.at(r, c).get_str().size());
        }
    }
    std::ostringstream os;
    auto pad = [&](const std::string& s, std::size_t w) {
        os << std::string(w - s.size(), ' ') << s;
    };
    pad("", width[0]);
    for (std::size_t c = 0; c < dim; ++c) {
        os << "  ";
        pad(col_head[c], width[c + 1]);
    }
    os << "\n";
    for (std::size_t r = 0; r < dim; ++r) {
        pad(row_head[r], width[0]);
        for (std::size_t c = 0; c < dim; ++c) {
            os << "  ";
            pad(table.at(r, c).get_str(), width[c + 1]);
        }
        os << "\n";
    }
    return os.str();
}

std::filesystem::path cache_file(const std::filesystem::path& cache_dir, int n) {
    return cache_dir / ("chartable_v" + std::to_string(kCacheSchemaVersion) + "_" +
                        std::to_string(n) + ".json");
}

CacheLookup load_or_build_table(int n, const std::filesystem::path& cache_dir,
                                const TableOptions& options) {
    const auto path = cache_file(cache_dir, n);
    if (std::filesystem::exists(path)) {
        std::string text = read_file(path);
        int version = cached_schema_version(text);
        if (version == kCacheSchemaVersion) {
            try {
                CharTable table = table_from_json(text);
                if (table.n() != n) throw CacheError("cache: file holds n=" + std::to_string(table.n()));
                return {std::move(table), true};
            } catch (const CacheError& e) {
                throw CacheError(path.string() + ": " + e.what());
            }
        }
        if (version < 0) {
            throw CacheError(path.string() + ": corrupt cache file (no readable schema_version)");
        }
    }
    CharTable table = character_table(n, options);
    write_file_atomically(path, table_to_json(table));
    return {std::move(table), false};
}

}  // namespace symchar
