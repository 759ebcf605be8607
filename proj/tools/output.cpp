#include "output.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "csv.hpp"
#include "run_config.hpp"

namespace phonostat::cli {

namespace fs = std::filesystem;

std::string fmt_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc())
        throw std::runtime_error("fmt_double: conversion failed");
    return std::string(buf, end);
}

std::string safe_name(const std::string& id) {
    std::string out = id;
    for (char& c : out) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '.' || c == '_' || c == '-';
        if (!ok)
            c = '_';
    }
    return out;
}

namespace {

std::string csv_cell(const nlohmann::ordered_json& v) {
    if (v.is_null())
        return "";
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number_float())
        return fmt_double(v.get<double>());
    if (v.is_number_unsigned())
        return std::to_string(v.get<std::uint64_t>());
    if (v.is_number_integer())
        return std::to_string(v.get<std::int64_t>());
    throw std::runtime_error("csv_cell: unsupported value type");
}

std::ofstream open_out(const fs::path& path) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot write file: " + path.string());
    return out;
}

}  // namespace

std::string write_records(const std::string& out_dir, const std::string& name,
                          const std::string& format, const RecordTable& table) {
    fs::path path = fs::path(out_dir) / (name + "." + format);
    std::ofstream out = open_out(path);
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& row : table.rows)
            arr.push_back(row);
        out << arr.dump(2) << '\n';
    } else {
        write_csv_row(out, table.columns);
        for (const auto& row : table.rows) {
            std::vector<std::string> cells;
            cells.reserve(table.columns.size());
            for (const std::string& col : table.columns)
                cells.push_back(csv_cell(row.at(col)));
            write_csv_row(out, cells);
        }
    }
    return path.string();
}

std::string write_json(const std::string& out_dir, const std::string& name,
                       const nlohmann::ordered_json& doc) {
    fs::path path = fs::path(out_dir) / (name + ".json");
    std::ofstream out = open_out(path);
    out << doc.dump(2) << '\n';
    return path.string();
}

}  // namespace phonostat::cli
