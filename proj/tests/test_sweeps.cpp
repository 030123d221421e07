#include <catch_amalgamated.hpp>

#include "qseq/sweeps.hpp"

using namespace qseq;

TEST_CASE("all sweeps pass and are reproducible", "[sweeps]") {
    const auto serial = run_sweeps({.seed = 99, .parallel = false, .tol = 1e-9});
    const auto parallel = run_sweeps({.seed = 99, .parallel = true, .tol = 1e-9});
    const auto names = sweep_names();
    REQUIRE(serial.size() == names.size());
    REQUIRE(parallel.size() == names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        INFO(names[i] << ": worst " << serial[i].worst << " vs " << serial[i].threshold);
        CHECK(serial[i].name == names[i]);
        CHECK(serial[i].passed);
        CHECK(serial[i].samples > 0);
        CHECK(parallel[i].name == serial[i].name);
        CHECK(parallel[i].worst == serial[i].worst);
        CHECK(parallel[i].samples == serial[i].samples);
    }
}
