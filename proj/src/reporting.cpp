#include "symchar/reporting.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace symchar {

using nlohmann::json;

OutputFormat parse_format(std::string_view text) {
    if (text == "pretty") return OutputFormat::Pretty;
    if (text == "json") return OutputFormat::Json;
    if (text == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format \"" + std::string(text) + "\" (pretty, json, csv)");
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("SYMCHAR_CACHE"); env && *env) return env;
    return ".symchar-cache";
}

unsigned resolve_workers(std::string_view text) {
    if (text == "auto") return std::max(1u, std::thread::hardware_concurrency());
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || v == 0) {
        throw std::invalid_argument("workers must be a positive integer or \"auto\", got \"" +
                                    std::string(text) + "\"");
    }
    return v;
}

namespace {

std::uint64_t parse_count(const json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string("report: ") + what + " must be a string");
    const std::string s = j.get<std::string>();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(std::string("report: ") + what + " is not a decimal string");
    }
    return v;
}

}  // namespace

std::string report_to_json(const CoveringPairReport& report) {
    json doc;
    doc["n"] = std::to_string(report.n);
    doc["k_value"] = report.k_value ? json(std::to_string(*report.k_value)) : json(nullptr);
    doc["matches_theorem"] = report.matches_theorem ? json(*report.matches_theorem) : json(nullptr);
    json pairs = json::array();
    json degenerate = json::array();
    for (const auto& p : report.pairs) {
        pairs.push_back(json::array({json(p.first.parts()), json(p.second.parts())}));
        degenerate.push_back(p.degenerate());
    }
    doc["pairs"] = std::move(pairs);
    doc["degenerate"] = std::move(degenerate);
    const auto& s = report.pruning_stats;
    doc["pruning_stats"] = {{"examined", std::to_string(s.examined)},
                            {"parity_pruned", std::to_string(s.parity_pruned)},
                            {"merge_pruned", std::to_string(s.merge_pruned)},
                            {"table_checked", std::to_string(s.table_checked)}};
    doc["vacuous"] = report.vacuous;
    return doc.dump() + "\n";
}

CoveringPairReport report_from_json(std::string_view text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw std::invalid_argument("report: not a JSON object");
    CoveringPairReport r;
    try {
        r.n = static_cast<int>(parse_count(doc.at("n"), "n"));
        if (!doc.at("k_value").is_null()) r.k_value = static_cast<int>(parse_count(doc["k_value"], "k_value"));
        if (!doc.at("matches_theorem").is_null()) r.matches_theorem = doc["matches_theorem"].get<bool>();
        for (const auto& p : doc.at("pairs")) {
            r.pairs.push_back({Partition(p.at(0).get<std::vector<int>>()),
                               Partition(p.at(1).get<std::vector<int>>())});
        }
        const json& s = doc.at("pruning_stats");
        r.pruning_stats.examined = parse_count(s.at("examined"), "examined");
        r.pruning_stats.parity_pruned = parse_count(s.at("parity_pruned"), "parity_pruned");
        r.pruning_stats.merge_pruned = parse_count(s.at("merge_pruned"), "merge_pruned");
        r.pruning_stats.table_checked = parse_count(s.at("table_checked"), "table_checked");
        r.vacuous = doc.at("vacuous").get<bool>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("report: ") + e.what());
    }
    return r;
}

std::string report_to_csv(const CoveringPairReport& report) {
    std::string out = "first,second,degenerate\n";
    for (const auto& p : report.pairs) {
        out += format_partition(p.first, '.') + "," + format_partition(p.second, '.') + "," +
               (p.degenerate() ? "true" : "false") + "\n";
    }
    return out;
}

std::string report_to_pretty(const CoveringPairReport& report) {
    std::ostringstream os;
    os << "n = " << report.n << (report.vacuous ? " (vacuous: no non-linear characters)" : "") << "\n";
    os << "covering pairs: " << report.pairs.size() << "\n";
    for (const auto& p : report.pairs) {
        os << "  {(" << format_partition(p.first) << "), (" << format_partition(p.second) << ")}"
           << (p.degenerate() ? "  degenerate" : "") << "\n";
    }
    os << "k = " << (report.k_value ? std::to_string(*report.k_value) : std::string("none")) << "\n";
    os << "matches theorem: "
       << (report.matches_theorem ? (*report.matches_theorem ? "yes" : "NO") : "n/a (n <= 6)") << "\n";
    const auto& s = report.pruning_stats;
    os << "pairs examined " << s.examined << ", parity-pruned " << s.parity_pruned
       << ", merge-pruned " << s.merge_pruned << ", table-checked " << s.table_checked << "\n";
    return os.str();
}

}  // namespace symchar
