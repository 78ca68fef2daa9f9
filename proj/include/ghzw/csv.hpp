#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ghzw/states.hpp"
#include "ghzw/wigner.hpp"

namespace ghzw::csv {

// Comma separated, '.' decimal point, header row, LF line endings. Numbers
// use the shortest representation that parses back to the same double.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Table&, const Table&) = default;
};

std::string format_double(double value);
// Throws IoError unless the whole field is a valid number.
double parse_double(std::string_view field);

std::string to_string(const Table& table);
// Throws IoError with row/column position on malformed input.
Table parse(std::string_view text);

void write_file(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

// Column index by name; IoError if absent.
std::size_t column(const Table& table, std::string_view name);

Table probability_table(const ProbabilityDistribution& dist);
ProbabilityDistribution parse_probability_table(const Table& table);

// Rows (theta, phi, w_value) in theta-major order.
Table wigner_table(const WignerGrid& grid);
// Rebuilds the axes and values; descriptors live in the sidecar and stay empty.
WignerGrid parse_wigner_table(const Table& table);

}  // namespace ghzw::csv
