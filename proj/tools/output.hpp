#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace phonostat::cli {

// Shortest round-trip decimal form, identical across runs.
std::string fmt_double(double v);

// Replaces anything outside [A-Za-z0-9._-] so text ids stay usable as file
// name fragments.
std::string safe_name(const std::string& id);

// One result table, built as typed JSON rows and rendered to either format.
// Columns fix the field order; every row must carry exactly these keys.
struct RecordTable {
    std::vector<std::string> columns;
    std::vector<nlohmann::ordered_json> rows;
};

// Writes <out_dir>/<name>.<format> and returns the path. CSV renders null as
// an empty field and booleans as true/false; JSON is a 2-space indented array.
std::string write_records(const std::string& out_dir, const std::string& name,
                          const std::string& format, const RecordTable& table);

// Raw JSON document writer used for the per-text profile files.
std::string write_json(const std::string& out_dir, const std::string& name,
                       const nlohmann::ordered_json& doc);

}  // namespace phonostat::cli
