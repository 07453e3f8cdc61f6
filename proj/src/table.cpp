#include "surftrap/table.hpp"

#include <cstdio>
#include <fstream>

#include "surftrap/errors.hpp"

namespace surftrap {

std::string format_si(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.11e", value);
    return buf;
}

std::string format_int(long long value) { return std::to_string(value); }

std::string format_bool(bool value) { return value ? "1" : "0"; }

std::string render_csv(const ResultTable& table) {
    auto check = [](const std::string& cell) {
        if (cell.find(',') != std::string::npos || cell.find('\n') != std::string::npos) {
            throw ValidationError("CSV cell may not contain commas or newlines: '" +
                                  cell + "'");
        }
    };
    std::string out;
    out += "# surftrap-csv v1 schema=" + table.schema + "\n";
    for (const auto& comment : table.comments) {
        out += "# " + comment + "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        check(table.columns[i]);
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw ValidationError("CSV row width differs from header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            check(row[i]);
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

void write_csv(const ResultTable& table, const std::string& path) {
    const std::string text = render_csv(table);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error("IoError", "cannot open output file: " + path);
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw Error("IoError", "failed writing output file: " + path);
    }
}

} // namespace surftrap
