#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace edgetangent::cli {

enum ExitCode : int {
    kOk = 0,
    kMalformedInput = 1,
    kDomainRejection = 2,  // not circumscriptible / not realizable / degenerate
    kResourceExhausted = 3,
    kViolation = 4,        // a verify campaign found a counterexample
};

/// Inclusive dimension range parsed from "3" or "2..8".
struct DimensionRange {
    int min = 2;
    int max = 8;
};

DimensionRange parse_dimension_range(std::string_view text);

/// EDGETANGENT_SEED when set, 42 otherwise.
std::uint64_t default_seed();

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgetangent::cli
