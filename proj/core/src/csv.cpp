#include "nvsim/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace nvsim {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::string provenance_json, std::vector<std::string> columns)
    : n_cols_(columns.size()) {
    body_ = "# " + std::move(provenance_json) + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        body_ += columns[i];
        body_ += (i + 1 < columns.size()) ? ',' : '\n';
    }
}

void CsvWriter::add_row(const std::vector<double>& values) {
    if (values.size() != n_cols_) throw std::invalid_argument("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        body_ += format_double(values[i]);
        body_ += (i + 1 < values.size()) ? ',' : '\n';
    }
    ++rows_;
}

void CsvWriter::add_row_raw(const std::vector<std::string>& cells) {
    if (cells.size() != n_cols_) throw std::invalid_argument("CsvWriter: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        body_ += cells[i];
        body_ += (i + 1 < cells.size()) ? ',' : '\n';
    }
    ++rows_;
}

void CsvWriter::write(const std::filesystem::path& final_path) const {
    write_file_atomic(final_path, body_);
}

void write_file_atomic(const std::filesystem::path& final_path, const std::string& content) {
    namespace fs = std::filesystem;
    if (final_path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(final_path.parent_path(), ec);
    }
    fs::path tmp = final_path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        os << content;
        os.flush();
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, final_path);
}

}  // namespace nvsim
