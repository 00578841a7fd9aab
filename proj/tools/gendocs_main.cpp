// Regenerates docs/symbols.md from the in-code symbol table.
#include <iostream>

#include "nvsim/csv.hpp"
#include "nvsim/symbols.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: nvsim-gendocs <output.md>\n";
        return 1;
    }
    nvsim::write_file_atomic(argv[1], nvsim::symbol_table_markdown());
    return 0;
}
