#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "biwave/selftest.hpp"

using namespace biwave;

TEST_CASE("selftest passes on a healthy build", "[selftest]") {
    const auto results = run_selftest(42);
    REQUIRE(results.size() >= 12);
    for (const auto& r : results) {
        INFO(r.name << ": " << r.detail);
        REQUIRE(r.pass);
    }
}

TEST_CASE("selftest is deterministic for a fixed seed", "[selftest]") {
    const auto a = run_selftest(7);
    const auto b = run_selftest(7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].name == b[i].name);
        REQUIRE(a[i].pass == b[i].pass);
        REQUIRE(a[i].detail == b[i].detail);
    }
}

TEST_CASE("selftest detects a corrupted Cayley constant", "[selftest]") {
    fault::cayley_perturbation = 1e-3;
    const auto results = run_selftest(42);
    fault::cayley_perturbation = 0.0;
    bool algebra_failed = false;
    bool any_failed = false;
    for (const auto& r : results) {
        any_failed = any_failed || !r.pass;
        if (r.name == "algebra-laws" || r.name == "generator-identity")
            algebra_failed = algebra_failed || !r.pass;
    }
    REQUIRE(algebra_failed);
    REQUIRE(any_failed);

    // The hook restores cleanly.
    for (const auto& r : run_selftest(42)) REQUIRE(r.pass);
}
