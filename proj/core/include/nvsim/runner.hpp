#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nvsim/scenario.hpp"

namespace nvsim {

struct RunOptions {
    std::filesystem::path out_dir = ".";
    int threads = 0;  // 0: hardware concurrency
};

struct RunResult {
    std::string task;
    std::size_t points = 0;   // rows across all emitted files
    double seconds = 0.0;
    std::vector<std::filesystem::path> files;
};

/// Dispatches a validated scenario to the owning module and writes its data
/// files atomically. Results are independent of the worker-thread count.
RunResult run(const Scenario& scenario, const RunOptions& opt = {});

}  // namespace nvsim
