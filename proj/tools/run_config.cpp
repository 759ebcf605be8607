#include "run_config.hpp"

#include <filesystem>
#include <fstream>
#include <set>

#include "csv.hpp"

namespace phonostat::cli {

std::vector<TextEntry> load_authors_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open authors file: " + path);
    std::filesystem::path base = std::filesystem::path(path).parent_path();

    std::vector<TextEntry> texts;
    int line = 0;
    for (const auto& row : read_csv(in)) {
        ++line;
        if (!row.empty() && !row[0].empty() && row[0][0] == '#')
            continue;
        if (line == 1 && row.size() == 3 && row[0] == "text_id" && row[1] == "author" &&
            row[2] == "path")
            continue;
        if (row.size() != 3)
            throw ConfigError("authors file line " + std::to_string(line) +
                              ": expected text_id,author,path");
        if (row[0].empty() || row[1].empty() || row[2].empty())
            throw ConfigError("authors file line " + std::to_string(line) + ": empty field");
        std::filesystem::path p(row[2]);
        if (p.is_relative())
            p = base / p;
        texts.push_back({row[0], row[1], p.string()});
    }
    return texts;
}

void validate_config(const RunConfig& config) {
    std::set<std::string> seen;
    for (const TextEntry& t : config.texts)
        if (!seen.insert(t.id).second)
            throw ConfigError("duplicate text_id: " + t.id);
    for (const std::string& mode : config.modes)
        if (mode != "all" && mode != "types" && mode != "exclusive-types")
            throw ConfigError("unknown mode: " + mode);
    if (!(config.beta_min > 0.0) || !(config.beta_max > config.beta_min))
        throw ConfigError("beta range must satisfy 0 < beta-min < beta-max");
    if (!(config.tol > 0.0))
        throw ConfigError("tol must be > 0");
    if (config.format != "json" && config.format != "csv")
        throw ConfigError("format must be json or csv");
    if (config.jobs < 0)
        throw ConfigError("jobs must be >= 0");
    for (const std::string& id : config.holdouts)
        if (!seen.count(id))
            throw ConfigError("holdout id not in authors file: " + id);
}

}  // namespace phonostat::cli
