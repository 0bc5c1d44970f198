#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace tma {

/// Shortest round-trip-exact decimal representation (to_chars):
/// parsing the printed string recovers the identical double.
std::string format_double(double value);

double parse_double(const std::string& text);

/// Simple comma-separated table with one header row, LF line endings.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    size_t column(const std::string& name) const;  // throws ShapeError if absent
};

std::string to_csv(const CsvTable& table);

CsvTable parse_csv(const std::string& text);

CsvTable read_csv_file(const std::filesystem::path& path);

/// Write bytes atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& bytes);

}  // namespace tma
