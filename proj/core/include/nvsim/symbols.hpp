#pragma once

#include <string>
#include <vector>

namespace nvsim {

/// One row of the canonical symbol table: physics symbol, config/field name,
/// unit, and the convention adopted for it in this code base.
struct SymbolEntry {
    std::string symbol;
    std::string field;
    std::string unit;
    std::string convention;
};

const std::vector<SymbolEntry>& symbol_table();

/// Markdown rendering of the table (the generated documentation artifact).
std::string symbol_table_markdown();

}  // namespace nvsim
