#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace phonostat::cli {

// Minimal CSV support shared by the writers below and the readers the tool
// uses for its own inputs: fields containing a comma, quote or newline are
// quoted, embedded quotes are doubled.

inline std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            os << ',';
        os << csv_escape(fields[i]);
    }
    os << '\n';
}

// Parses quoted fields; skips blank lines; tolerates CRLF endings.
inline std::vector<std::vector<std::string>> read_csv(std::istream& is) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool row_started = false;
    auto end_field = [&] {
        row.push_back(field);
        field.clear();
    };
    auto end_row = [&] {
        if (row_started || !row.empty()) {
            end_field();
            rows.push_back(row);
            row.clear();
        }
        row_started = false;
    };
    char c;
    while (is.get(c)) {
        if (in_quotes) {
            if (c == '"') {
                if (is.peek() == '"') {
                    is.get(c);
                    field += '"';
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            row_started = true;
        } else if (c == '"') {
            in_quotes = true;
            row_started = true;
        } else if (c == ',') {
            end_field();
            row_started = true;
        } else if (c == '\n') {
            end_row();
        } else if (c != '\r') {
            field += c;
            row_started = true;
        }
    }
    end_row();
    return rows;
}

}  // namespace phonostat::cli
