#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phonostat::cli {

// Usage or configuration problems; the driver maps these to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TextEntry {
    std::string id;
    std::string author;
    std::string path;
};

struct RunConfig {
    std::string lexicon_path;
    std::string authors_path;
    std::vector<TextEntry> texts;
    std::vector<std::string> modes;  // empty means each command's default set
    double beta_min = 0.1;
    double beta_max = 2.0;
    double tol = 1e-5;
    std::string out_dir = "out";
    std::string format = "json";
    std::uint64_t seed = 0;
    std::string cache_dir;  // defaults to <out_dir>/cache
    int jobs = 0;           // 0 picks the hardware concurrency
    std::vector<std::string> holdouts;
};

// Reads `text_id,author,path` rows; a leading header row and `#` comment
// lines are skipped; relative paths are resolved against the file's
// directory. Throws ConfigError on malformed rows.
std::vector<TextEntry> load_authors_csv(const std::string& path);

// Enforces the config invariants shared by the corpus commands: unique text
// ids, known mode labels, a proper beta range, a known output format.
void validate_config(const RunConfig& config);

}  // namespace phonostat::cli
