#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "adams/chartheory.hpp"
#include "adams/integer.hpp"

#include "json.hpp"

namespace adams {

// Malformed invocation or unreadable input; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandRequest {
    std::string command;  // "group-info", "chartab", "adams", ...
    nlohmann::json input;  // null when the command reads no input
    std::optional<std::string> group;
    std::optional<std::int64_t> n;
    std::optional<std::uint64_t> p, ell, a, d, upto, bound, capital_N, count, seed, trials;
    bool drop_j0 = false;
    std::optional<std::string> suite;
    std::optional<std::filesystem::path> cache_dir;
    std::function<void(const std::string&)> progress;
};

struct CommandSpec {
    std::string name;
    std::string summary;
    std::string input_schema;  // empty when no input is read
    bool group_shortcut;       // --group NAME may replace the input
};

const std::vector<CommandSpec>& command_specs();
const CommandSpec& command_spec(const std::string& name);

// Payload of one command; throws DomainError, SizeLimitError, UsageError.
nlohmann::json run_command(const CommandRequest& req);

struct CommandResult {
    nlohmann::json envelope;  // {status, payload, timing_ms, provenance}
    int exit_code;            // 0 ok, 1 domain error or failed verification, 2 usage
};

// Catches every library error; never throws.
CommandResult execute(const CommandRequest& req);

// Sorted keys, no whitespace.
std::string canonical_json(const nlohmann::json& j);

// Integers that fit int64 stay numbers, others become decimal strings.
nlohmann::json to_json_int(const BigInt& v);
nlohmann::json to_json_rational(const BigRational& v);
// {"conductor": e, "coeffs": ["num/den", ...]} in the power basis.
nlohmann::json to_json_cyclotomic(const CyclotomicElement& v);
// {"coeffs": [...], "values": [[...], ...]}
nlohmann::json to_json_character(const VirtualCharacter& chi);

// ADAMS_GALOIS_CACHE, then the flag, then $XDG_CACHE_HOME or ~/.cache.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

}  // namespace adams
