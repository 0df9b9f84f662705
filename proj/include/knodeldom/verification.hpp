#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace knodeldom {

/// Outcome of an exhaustive or sampled check of a universally quantified
/// statement. A failing report always carries the first counterexample in
/// canonical enumeration order.
struct VerificationReport {
    std::string check;
    bool passed = true;
    std::uint64_t cases = 0;
    std::optional<std::string> counterexample;

    void fail(std::string witness)
    {
        if (passed) {
            passed = false;
            counterexample = std::move(witness);
        }
    }

    void merge(const VerificationReport& other)
    {
        cases += other.cases;
        if (!other.passed)
            fail(*other.counterexample);
    }
};

} // namespace knodeldom
