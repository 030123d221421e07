#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qseq/chebyshev.hpp"

namespace qseq {

/// One randomized property sweep: `worst` is the largest observed violation
/// metric and the sweep passes when worst <= threshold.
struct SweepResult {
    std::string name;
    bool passed = false;
    Index samples = 0;
    double worst = 0.0;
    double threshold = 0.0;
};

struct SweepOptions {
    std::uint64_t seed = 20240601;
    bool parallel = false;  ///< run sweeps on separate threads; output order is unchanged
    double tol = 1e-9;
};

[[nodiscard]] std::vector<std::string> sweep_names();

[[nodiscard]] std::vector<SweepResult> run_sweeps(const SweepOptions& options = {});

}  // namespace qseq
