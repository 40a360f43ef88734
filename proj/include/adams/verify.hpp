#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace adams {

struct VerifyOptions {
    std::uint64_t seed = 20261014;
    std::size_t trials = 1000;  // per randomized property family
};

struct SuiteReport {
    std::string name;
    std::uint64_t checks = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> messages;  // first failures only

    bool ok() const { return failed == 0; }
};

const std::vector<std::string>& verify_suite_names();
// DomainError for an unknown suite name.
SuiteReport run_verify_suite(const std::string& name, const VerifyOptions& options);
// All suites when name is empty.
std::vector<SuiteReport> run_verify(const std::optional<std::string>& name, const VerifyOptions& options);

}  // namespace adams
