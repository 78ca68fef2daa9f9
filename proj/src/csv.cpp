#include "ghzw/csv.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <system_error>

#include "ghzw/errors.hpp"

namespace ghzw::csv {

namespace {

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            return fields;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

std::string where(std::size_t line, std::size_t col) {
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc{}) {
        throw IoError("could not format number");
    }
    return std::string(buf, end);
}

double parse_double(std::string_view field) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || field.empty()) {
        throw IoError("not a number: '" + std::string(field) + "'");
    }
    return value;
}

std::string to_string(const Table& table) {
    std::string out;
    const auto emit = [&out](const std::vector<std::string>& fields) {
        for (std::size_t k = 0; k < fields.size(); ++k) {
            if (k != 0) {
                out += ',';
            }
            out += fields[k];
        }
        out += '\n';
    };
    emit(table.header);
    for (const auto& row : table.rows) {
        emit(row);
    }
    return out;
}

Table parse(std::string_view text) {
    Table table;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            throw IoError("CRLF line ending at " + where(line_no, line.size()));
        }
        if (line.empty()) {
            throw IoError("empty record at " + where(line_no, 1));
        }
        auto fields = split_fields(line);
        if (table.header.empty()) {
            table.header = std::move(fields);
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw IoError("expected " + std::to_string(table.header.size()) + " fields, got " +
                          std::to_string(fields.size()) + " at " + where(line_no, 1));
        }
        table.rows.push_back(std::move(fields));
    }
    if (table.header.empty()) {
        throw IoError("missing header row");
    }
    return table;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " +
                          ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
        throw IoError("failed writing " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::size_t column(const Table& table, std::string_view name) {
    for (std::size_t k = 0; k < table.header.size(); ++k) {
        if (table.header[k] == name) {
            return k;
        }
    }
    throw IoError("missing column '" + std::string(name) + "'");
}

Table probability_table(const ProbabilityDistribution& dist) {
    Table table{{"basis_label", "probability"}, {}};
    table.rows.reserve(dist.labels.size());
    for (std::size_t k = 0; k < dist.labels.size(); ++k) {
        table.rows.push_back({dist.labels[k], format_double(dist.probabilities[k])});
    }
    return table;
}

ProbabilityDistribution parse_probability_table(const Table& table) {
    const std::size_t label_col = column(table, "basis_label");
    const std::size_t prob_col = column(table, "probability");
    ProbabilityDistribution dist;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        dist.labels.push_back(table.rows[r][label_col]);
        try {
            dist.probabilities.push_back(parse_double(table.rows[r][prob_col]));
        } catch (const IoError& e) {
            throw IoError(std::string(e.what()) + " at " + where(r + 2, prob_col + 1));
        }
    }
    return dist;
}

Table wigner_table(const WignerGrid& grid) {
    Table table{{"theta", "phi", "w_value"}, {}};
    table.rows.reserve(grid.values.size());
    for (std::size_t i = 0; i < grid.theta_values.size(); ++i) {
        const std::string theta = format_double(grid.theta_values[i]);
        for (std::size_t j = 0; j < grid.phi_values.size(); ++j) {
            table.rows.push_back(
                {theta, format_double(grid.phi_values[j]), format_double(grid.at(i, j))});
        }
    }
    return table;
}

WignerGrid parse_wigner_table(const Table& table) {
    const std::size_t tc = column(table, "theta");
    const std::size_t pc = column(table, "phi");
    const std::size_t wc = column(table, "w_value");
    WignerGrid grid;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        double theta = 0.0;
        double phi = 0.0;
        double w = 0.0;
        try {
            theta = parse_double(row[tc]);
            phi = parse_double(row[pc]);
            w = parse_double(row[wc]);
        } catch (const IoError& e) {
            throw IoError(std::string(e.what()) + " at line " + std::to_string(r + 2));
        }
        if (grid.theta_values.empty() || grid.theta_values.back() != theta) {
            grid.theta_values.push_back(theta);
        }
        if (grid.theta_values.size() == 1) {
            grid.phi_values.push_back(phi);
        }
        grid.values.push_back(w);
    }
    if (grid.values.size() != grid.theta_values.size() * grid.phi_values.size()) {
        throw IoError("Wigner table is not a full theta-major lattice");
    }
    return grid;
}

}  // namespace ghzw::csv
