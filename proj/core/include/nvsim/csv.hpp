#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace nvsim {

/// Deterministic float formatting for data files (shortest round-trip via
/// %.17g would carry noise digits; fixed %.17g keeps reruns byte-identical).
std::string format_double(double v);

/// Accumulates a CSV body: one '#'-prefixed provenance line, a column-name
/// row, then data rows. Written atomically (temp file + rename), so an
/// interrupted run never leaves a truncated file at the final path.
class CsvWriter {
  public:
    CsvWriter(std::string provenance_json, std::vector<std::string> columns);

    void add_row(const std::vector<double>& values);
    void add_row_raw(const std::vector<std::string>& cells);

    std::size_t rows() const { return rows_; }
    const std::string& body() const { return body_; }

    void write(const std::filesystem::path& final_path) const;

  private:
    std::string body_;
    std::size_t n_cols_;
    std::size_t rows_ = 0;
};

/// Atomic write of arbitrary text.
void write_file_atomic(const std::filesystem::path& final_path, const std::string& content);

}  // namespace nvsim
