#pragma once

#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

namespace timsim {

/// Shortest decimal that round-trips to the same double; '.' separator,
/// independent of the global locale.
std::string format_double(double v);

/// Rectangular table with a mandatory header row.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> columns);

    const std::vector<std::string>& columns() const { return columns_; }
    std::size_t rows() const { return rows_.size(); }

    /// Throws std::invalid_argument when the width differs from the header.
    void add_row(std::vector<double> values);

    std::string str() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace timsim
