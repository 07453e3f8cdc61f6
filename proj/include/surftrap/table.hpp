#pragma once

#include <string>
#include <vector>

namespace surftrap {

/// Column-schema'd result table. Cells are preformatted strings so emission
/// is byte-deterministic; numeric cells use format_si (12 significant
/// digits, scientific).
struct ResultTable {
    std::string schema;               // e.g. "sweep-z0/v1"
    std::vector<std::string> columns;
    std::vector<std::string> comments; // emitted after the schema line
    std::vector<std::vector<std::string>> rows;
};

/// 12-significant-digit scientific notation, locale-independent.
std::string format_si(double value);
/// Integer-valued cell.
std::string format_int(long long value);
/// Boolean cell as 1/0.
std::string format_bool(bool value);

/// Renders: schema comment line, optional comment lines, header row, data
/// rows. Fields containing commas are not permitted (throws).
std::string render_csv(const ResultTable& table);
void write_csv(const ResultTable& table, const std::string& path);

} // namespace surftrap
