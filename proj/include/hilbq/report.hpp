#pragma once

#include <string>

namespace hilbq {

/// Outcome of a verification routine. Failures are reported, not thrown;
/// `detail` carries the first discrepancy location when pass is false.
struct CheckReport {
    bool pass = true;
    std::string detail;

    static CheckReport ok() { return {true, ""}; }
    static CheckReport fail(std::string d) { return {false, std::move(d)}; }
};

}  // namespace hilbq
