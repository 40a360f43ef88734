#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <unistd.h>

#include "CLI11.hpp"
#include "adams/commands.hpp"

namespace {

using adams::CommandRequest;
using nlohmann::json;

void write_out(const std::string& s) {
    const std::string line = s + "\n";
    std::fwrite(line.data(), 1, line.size(), stdout);
    std::fflush(stdout);
}

std::string schema_listing() {
    std::string out = "commands (input schema):\n";
    for (const auto& s : adams::command_specs()) {
        out += "  " + (s.name == "group-info" ? std::string("group info") : s.name) + ": " + s.summary + "\n";
        if (!s.input_schema.empty()) out += "      input " + s.input_schema + "\n";
    }
    return out;
}

int usage_failure(const std::string& command, const std::string& message, const std::string& help) {
    std::string schema;
    for (const auto& s : adams::command_specs())
        if (s.name == command) schema = s.input_schema;
    json env = {{"status", "error"},
                {"payload", {{"kind", "usage"}, {"message", message}, {"schema", schema}}},
                {"timing_ms", 0},
                {"provenance", {{"command", command}}}};
    write_out(adams::canonical_json(env));
    std::cerr << "adams-galois: " << message << "\n" << help;
    if (!schema.empty()) std::cerr << "input schema: " << schema << "\n";
    return 2;
}

json read_input(const std::string& source) {
    std::string text;
    if (source == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(source);
        if (!in) throw adams::UsageError("cannot read input file " + source);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw adams::UsageError(std::string("input is not valid JSON: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Adams operations, group-ring lattices and cyclotomic class-group data", "adams-galois"};
    app.require_subcommand(1);
    app.fallthrough();

    CommandRequest req;
    std::string input_path, cache_dir;
    bool progress = false;
    app.add_option("--input,-i", input_path, "JSON input file, - for stdin");
    app.add_option("--cache-dir", cache_dir, "Bernoulli cache directory");

    std::map<CLI::App*, std::string> names;
    auto add = [&](CLI::App* parent, const std::string& cli_name, const std::string& command) {
        auto* sub = parent->add_subcommand(cli_name, adams::command_spec(command).summary);
        names[sub] = command;
        if (adams::command_spec(command).group_shortcut) sub->add_option("--group", req.group, "corpus group name");
        return sub;
    };

    auto* group = app.add_subcommand("group", "group structure");
    group->require_subcommand(1);
    group->fallthrough();
    add(group, "info", "group-info");
    add(&app, "chartab", "chartab");
    add(&app, "adams", "adams")->add_option("--n", req.n)->required();
    add(&app, "spectrum", "spectrum")->add_option("--p", req.p, "residue characteristic, 0 for Q")->required();
    add(&app, "wedderburn", "wedderburn")->add_option("--p", req.p)->required();
    add(&app, "artin", "artin");
    auto* tp = add(&app, "tensorpow", "tensorpow");
    tp->add_option("--ell", req.ell)->required();
    tp->add_option("--group", req.group, "corpus group for terms without one");
    auto* fa = add(&app, "fa", "fa");
    fa->add_option("--ell", req.ell)->required();
    fa->add_option("--a", req.a)->required();
    add(&app, "psi-cyclic", "psi-cyclic")->add_option("--ell", req.ell)->required();
    add(&app, "zeta-check", "zeta-check")->add_option("--ell", req.ell, "default: least odd prime not dividing |G|");
    add(&app, "bernoulli", "bernoulli")->add_option("--upto", req.upto)->required();
    add(&app, "herbrand", "herbrand")->add_option("--p", req.p)->required();
    add(&app, "irregular-scan", "irregular-scan")->add_option("--bound", req.bound)->required();
    auto* ps = add(&app, "prime-search", "prime-search");
    ps->add_option("--p", req.p)->required();
    ps->add_option("--N", req.capital_N)->required();
    ps->add_option("--count", req.count)->required();
    ps->add_flag("--progress", progress, "report progress on stderr");
    add(&app, "eigen-decompose", "eigen-decompose");
    auto* ef = add(&app, "eigen-filter", "eigen-filter");
    ef->add_option("--p", req.p)->required();
    ef->add_option("--d", req.d)->required();
    ef->add_option("--ell", req.ell)->required();
    ef->add_flag("--drop-j0", req.drop_j0);
    add(&app, "bound", "bound");
    auto* vf = add(&app, "verify", "verify");
    vf->add_option("--suite", req.suite);
    vf->add_option("--seed", req.seed);
    vf->add_option("--trials", req.trials, "trials per randomized property family");
    app.footer(schema_listing());

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::string command, help = app.help();
        for (const auto& [sub, name] : names)
            if (sub->parsed()) {
                command = name;
                help = sub->help();
            }
        return usage_failure(command, e.what(), help);
    }

    for (const auto& [sub, name] : names)
        if (sub->parsed()) req.command = name;
    const auto& spec = adams::command_spec(req.command);
    std::string help;
    for (const auto& [sub, name] : names)
        if (name == req.command) help = sub->help();

    try {
        const bool shortcut = spec.group_shortcut && req.group;
        if (!input_path.empty()) {
            req.input = read_input(input_path);
        } else if (!spec.input_schema.empty() && !shortcut) {
            if (::isatty(STDIN_FILENO)) throw adams::UsageError("no input: pass --input FILE or pipe JSON on stdin");
            req.input = read_input("-");
        }
        if (shortcut && req.input.is_null() && req.command != "tensorpow") req.input = {{"group", *req.group}};
    } catch (const adams::UsageError& e) {
        return usage_failure(req.command, e.what(), help);
    }

    if (req.command == "bernoulli" || req.command == "herbrand" || req.command == "irregular-scan")
        req.cache_dir = adams::resolve_cache_dir(cache_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(cache_dir));
    if (progress) req.progress = [](const std::string& s) { std::cerr << "prime-search: " << s << "\n"; };

    auto result = adams::execute(req);
    write_out(adams::canonical_json(result.envelope));
    if (result.exit_code == 2) {
        std::cerr << "adams-galois: " << result.envelope["payload"]["message"].get<std::string>() << "\n" << help;
        if (!spec.input_schema.empty()) std::cerr << "input schema: " << spec.input_schema << "\n";
    }
    return result.exit_code;
}
