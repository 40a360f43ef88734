#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>

#include "adams/commands.hpp"
#include "adams/cycloclass.hpp"
#include "adams/eigenact.hpp"
#include "adams/error.hpp"
#include "adams/gring.hpp"
#include "adams/hash.hpp"
#include "adams/verify.hpp"

namespace adams {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

const char* const kGroupSchema =
    R"({"group": NAME} | {"group": GROUP} | GROUP, GROUP = {"name"?, "table": [[int]]} | {"name"?, "perm_gens": [[[int]]]})";
const char* const kLatticeSchema =
    R"({"group": NAME|GROUP, "rank": r, "gens": {"g0": [[int]], ...}, "invert": ell|null} | {"group": NAME, "kind": "trivial"|"sign"|"regular"|"perm"|"aug"})";

template <class T>
T need(const std::optional<T>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

json int_list(const std::vector<BigInt>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json_int(x));
    return out;
}

template <class T>
json plain_list(const std::vector<T>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x);
    return out;
}

json matrix_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (const auto& x : m.row(r)) row.push_back(to_json_int(x));
        rows.push_back(row);
    }
    return rows;
}

BigInt parse_int(const json& x, const char* what) {
    if (x.is_number_integer()) return BigInt(static_cast<long>(x.get<std::int64_t>()));
    if (x.is_string()) {
        BigInt v;
        if (v.set_str(x.get<std::string>(), 10) == 0) return v;
    }
    throw DomainError(std::string(what) + " entries must be integers");
}

FiniteGroup group_value(const json& g) {
    if (g.is_string()) return corpus_group(g.get<std::string>());
    return FiniteGroup::from_json(g);
}

FiniteGroup input_group(const CommandRequest& req) {
    if (req.group) return corpus_group(*req.group);
    const json& in = req.input;
    if (!in.is_object()) throw UsageError("expected a group");
    if (in.contains("group")) return group_value(in.at("group"));
    if (in.contains("table") || in.contains("perm_gens")) return FiniteGroup::from_json(in);
    throw UsageError("expected a group");
}

GRingLattice lattice_value(const json& in, const std::optional<FiniteGroup>& inherited = std::nullopt) {
    if (!in.is_object()) throw UsageError("expected a lattice");
    if (in.contains("kind")) {
        require(in.contains("group") && in.at("group").is_string(), "corpus lattice needs a corpus group name");
        return GRingLattice::corpus(in.at("group").get<std::string>(), in.at("kind").get<std::string>());
    }
    if (!in.contains("group") && inherited) {
        json copy = in;
        copy["group"] = inherited->to_json();
        return GRingLattice::from_json(copy);
    }
    if (!in.contains("rank") || !in.contains("gens")) throw UsageError("expected a lattice");
    return GRingLattice::from_json(in);
}

GRingLattice input_lattice(const CommandRequest& req) {
    if (req.group && req.input.is_null()) throw UsageError("expected a lattice");
    return lattice_value(req.input);
}

// Lattices without an inverted prime are read over Z[1/ell].
GRingLattice over_inverted(const GRingLattice& m, std::uint64_t ell) {
    return m.inverted_prime() ? m : m.with_inverted_prime(ell);
}

std::vector<VirtualCharacter> input_characters(const CommandRequest& req, const std::shared_ptr<const CharacterTable>& t) {
    const json& in = req.input;
    std::vector<VirtualCharacter> out;
    if (in.is_object() && in.contains("character")) {
        const json& c = in.at("character");
        if (c.is_object() && c.contains("irreducible")) {
            const auto i = c.at("irreducible").get<std::size_t>();
            require(i < t->size(), "irreducible index out of range");
            out.push_back(VirtualCharacter::irreducible(t, i));
        } else if (c.is_object() && c.contains("coeffs")) {
            std::vector<BigInt> coeffs;
            for (const auto& x : c.at("coeffs")) coeffs.push_back(parse_int(x, "character coeffs"));
            require(coeffs.size() == t->size(), "character needs one coefficient per irreducible");
            out.emplace_back(t, coeffs);
        } else {
            throw UsageError(R"(character must be {"coeffs": [int]} or {"irreducible": i})");
        }
    }
    return out;
}

json product_character_json(const ProductCharacter& x) {
    return {{"aux_order", x.aux->group().order()}, {"coeffs", matrix_json(x.coeffs)}};
}

BoundedComplex input_complex(const CommandRequest& req) {
    const json& in = req.input;
    if (!in.is_object() || !in.contains("terms") || !in.at("terms").is_array()) throw UsageError("expected a complex");
    std::optional<FiniteGroup> g;
    if (in.contains("group")) g = group_value(in.at("group"));
    else if (req.group) g = corpus_group(*req.group);
    std::vector<GRingLattice> terms;
    for (const auto& t : in.at("terms")) {
        if (t.is_object() && t.contains("kind") && !t.contains("group") && g) {
            json copy = t;
            copy["group"] = g->name();
            terms.push_back(lattice_value(copy));
        } else {
            terms.push_back(lattice_value(t, g));
        }
    }
    require(!terms.empty(), "complex needs at least one term");
    const json diffs = in.value("differentials", json::array());
    require(diffs.is_array() && diffs.size() + 1 == terms.size(), "complex needs one differential between consecutive terms");
    std::vector<SparseMatrix> ds;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        require(diffs[i].is_array(), "differential must be a list of rows");
        const std::size_t rows = terms[i + 1].rank(), cols = terms[i].rank();
        require(diffs[i].size() == rows, "differential has the wrong number of rows");
        IntMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            require(diffs[i][r].is_array() && diffs[i][r].size() == cols, "differential has the wrong number of columns");
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_int(diffs[i][r][c], "differential");
        }
        ds.push_back(SparseMatrix::from_dense(m));
    }
    return BoundedComplex(in.value("lowest_degree", 0), std::move(terms), std::move(ds));
}

Elem long_cycle(const FiniteGroup& sym) {
    for (Elem e = 0; e < sym.order(); ++e) {
        const auto& p = symmetric_group_permutation(sym, e);
        bool ok = true;
        for (std::size_t x = 0; x < p.size(); ++x) ok = ok && p[x] == (x + 1) % p.size();
        if (ok) return e;
    }
    throw InternalError("symmetric group has no long cycle");
}

// ---------------------------------------------------------------- commands

json cmd_group_info(const CommandRequest& req) {
    auto g = input_group(req);
    json classes = json::array();
    for (const auto& c : g.conjugacy_classes())
        classes.push_back({{"representative", c.representative}, {"size", c.members.size()},
                           {"element_order", g.element_order(c.representative)}});
    json sylow = json::object();
    for (std::uint64_t p : {2u, 3u}) {
        auto s = sylow_report(g, p);
        sylow[std::to_string(p)] = {{"order", s.subgroup.size()}, {"type", s.type_tag.value_or("")}};
    }
    return {{"name", g.name()},
            {"order", g.order()},
            {"exponent", g.exponent()},
            {"abelian", g.is_abelian()},
            {"num_classes", g.conjugacy_classes().size()},
            {"num_rational_classes", q_classes(g).size()},
            {"classes", classes},
            {"sylow", sylow},
            {"hash", g.hash()}};
}

json cmd_chartab(const CommandRequest& req) {
    auto g = input_group(req);
    auto t = CharacterTable::of(g);
    json chars = json::array();
    for (std::size_t i = 0; i < t->size(); ++i) chars.push_back(to_json_character(VirtualCharacter::irreducible(t, i)));
    json reps = json::array(), sizes = json::array();
    for (std::size_t c = 0; c < g.conjugacy_classes().size(); ++c) {
        reps.push_back(g.conjugacy_classes()[c].representative);
        sizes.push_back(t->class_size(c));
    }
    json degrees = json::array();
    for (std::size_t i = 0; i < t->size(); ++i) degrees.push_back(t->degree(i));
    return {{"conductor", t->conductor()}, {"class_representatives", reps}, {"class_sizes", sizes},
            {"degrees", degrees},          {"irreducibles", chars}};
}

json cmd_adams(const CommandRequest& req) {
    const auto n = need(req.n, "--n");
    auto t = CharacterTable::of(input_group(req));
    auto chars = input_characters(req, t);
    if (chars.empty())
        for (std::size_t i = 0; i < t->size(); ++i) chars.push_back(VirtualCharacter::irreducible(t, i));
    json images = json::array();
    for (const auto& chi : chars) images.push_back(to_json_character(adams_character(n, chi)));
    return {{"n", n}, {"images", images}};
}

json cmd_spectrum(const CommandRequest& req) {
    const auto p = need(req.p, "--p");
    auto g = input_group(req);
    auto t = CharacterTable::of(g);
    auto chars = input_characters(req, t);
    json ideals = json::array();
    for (const auto& ideal : prime_spectrum(g, p)) {
        json e = {{"class_representative", ideal.qclass.representative},
                  {"class_members", plain_list(ideal.qclass.members)},
                  {"residue_char", ideal.residue_char}};
        if (!chars.empty()) {
            auto w = ideal_membership_detail(ideal, chars.front());
            json wj = {{"member", w.member}, {"value", to_json_cyclotomic(w.value)}};
            if (w.field_characteristic > 0) {
                wj["field"] = {{"characteristic", w.field_characteristic},
                               {"degree", w.field_degree},
                               {"modulus", plain_list(w.field_modulus)},
                               {"zeta_image", plain_list(w.zeta_image)},
                               {"value_image", plain_list(w.value_image)}};
            }
            e["membership"] = wj;
        }
        ideals.push_back(e);
    }
    return {{"p", p}, {"count", ideals.size()}, {"ideals", ideals}};
}

json cmd_wedderburn(const CommandRequest& req) {
    const auto p = need(req.p, "--p");
    json comps = json::array();
    for (const auto& c : wedderburn_pgroup(input_group(req), p))
        comps.push_back({{"matrix_size", c.matrix_size}, {"cyclotomic_level", c.cyclotomic_level},
                         {"characters", plain_list(c.characters)}});
    return {{"p", p}, {"components", comps}};
}

json cmd_artin(const CommandRequest& req) {
    auto r = artin_exponent(input_group(req));
    return {{"cokernel_exponent", to_json_int(r.cokernel_exponent)},
            {"trivial_char_index", to_json_int(r.trivial_char_index)},
            {"induced_columns", r.induced_columns}};
}

json cmd_tensorpow(const CommandRequest& req) {
    const auto ell = need(req.ell, "--ell");
    require(ell >= 1, "tensor power exponent must be positive");
    auto c = input_complex(req);
    auto t = tensor_power_complex(c, ell);
    json ranks = json::array();
    for (int k = t.lowest_degree(); k <= t.highest_degree(); ++k) ranks.push_back(t.term(k).rank());
    auto cyc = euler_character(t.restrict_aux_to_cyclic(long_cycle(t.aux())));
    json out = {{"ell", ell},
                {"lowest_degree", t.lowest_degree()},
                {"ranks", ranks},
                {"euler_character", product_character_json(euler_character(t))},
                {"cyclic_euler_character", product_character_json(cyc)}};
    if (is_prime(ell) && c.group().order() % ell != 0) {
        auto chi = VirtualCharacter::zero(CharacterTable::of(c.group()));
        for (int k = c.lowest_degree(); k <= c.highest_degree(); ++k)
            chi = (k % 2 == 0) ? chi + c.term(k).character() : chi - c.term(k).character();
        auto psi = adams_character(static_cast<std::int64_t>(ell), chi);
        out["adams_character"] = to_json_character(psi);
        out["agrees_with_adams_mod_free"] = in_free_ideal(cyc - inflate_character(cyc.aux, psi));
    }
    return out;
}

json cmd_fa(const CommandRequest& req) {
    const auto ell = need(req.ell, "--ell");
    const auto a = need(req.a, "--a");
    auto f = fa_construct(over_inverted(input_lattice(req), ell), ell, a);
    return {{"ell", ell}, {"a", a % ell}, {"rank", f.rank()}, {"traces", int_list(f.traces())},
            {"character", to_json_character(f.character())}};
}

json cmd_psi_cyclic(const CommandRequest& req) {
    const auto ell = need(req.ell, "--ell");
    auto p = over_inverted(input_lattice(req), ell);
    auto psi = psi_cyclic_character(p, ell);
    auto adams = adams_character(static_cast<std::int64_t>(ell), p.character());
    return {{"ell", ell}, {"character", to_json_character(psi)}, {"adams_character", to_json_character(adams)},
            {"equal", psi == adams}};
}

json cmd_zeta_check(const CommandRequest& req) {
    auto m = input_lattice(req);
    std::uint64_t ell = 3;
    if (req.ell) {
        ell = *req.ell;
    } else {
        while (m.group().order() % ell == 0 || !is_prime(ell)) ++ell;
    }
    require(is_prime(ell), "ell must be prime");
    const BigInt scale = static_cast<unsigned long>(ell - 1);
    auto zx = zeta_map(AugmentedLattice::inflate(m, ell));
    auto expected = m.character().scaled(scale);
    auto zf = zeta_map(AugmentedLattice::free_cyclic(m, ell));
    return {{"ell", ell},
            {"zeta_xi", to_json_character(zx)},
            {"expected", to_json_character(expected)},
            {"zeta_xi_holds", zx == expected},
            {"zeta_free", to_json_character(zf)},
            {"zeta_free_vanishes", zf == VirtualCharacter::zero(zf.table())}};
}

json cmd_bernoulli(const CommandRequest& req) {
    const auto upto = need(req.upto, "--upto");
    auto t = bernoulli(upto, req.cache_dir);
    json values = json::array();
    for (std::uint64_t k = 0; k <= upto; ++k) values.push_back(to_json_rational(t.value(k)));
    return {{"upto", upto}, {"values", values}};
}

json cmd_herbrand(const CommandRequest& req) {
    const auto p = need(req.p, "--p");
    auto r = herbrand_report(p, req.cache_dir);
    json certs = json::object();
    for (const auto& [i, ok] : r.even_certificates) certs[std::to_string(i)] = ok;
    return {{"p", p}, {"surviving_odd_indices", plain_list(r.surviving_odd_indices)}, {"even_certificates", certs}};
}

json cmd_irregular_scan(const CommandRequest& req) {
    const auto bound = need(req.bound, "--bound");
    json pairs = json::array();
    for (const auto& [p, k] : irregular_scan(bound, req.cache_dir)) pairs.push_back({p, k});
    return {{"bound", bound}, {"pairs", pairs}};
}

json cmd_prime_search(const CommandRequest& req) {
    const auto p = need(req.p, "--p");
    const auto n = need(req.capital_N, "--N");
    const auto count = need(req.count, "--count");
    SearchProgress progress;
    if (req.progress)
        progress = [&](std::uint64_t examined, std::size_t found) {
            req.progress("examined " + std::to_string(examined) + " primes, found " + std::to_string(found));
        };
    json primes = json::array();
    bool revalidated = true;
    for (const auto& c : cft_prime_search(p, n, count, progress)) {
        primes.push_back(c.ell);
        revalidated = revalidated && cft_conditions_hold(c);
    }
    return {{"p", p}, {"N", n}, {"primes", primes}, {"revalidated", revalidated}};
}

EigenModule input_module(const CommandRequest& req) {
    if (!req.input.is_object()) throw UsageError("expected an eigen module");
    return EigenModule::from_json(req.input);
}

json cmd_eigen_decompose(const CommandRequest& req) {
    auto m = input_module(req);
    auto dec = eigen_decompose(m);
    json comps = json::array();
    for (const auto& [i, c] : dec.components)
        comps.push_back({{"i", i},
                         {"order", to_json_int(c.order)},
                         {"invariants", int_list(c.invariants)},
                         {"idempotent", matrix_json(c.idempotent)},
                         {"generators", matrix_json(c.generators)}});
    return {{"p", m.prime()}, {"u", m.generator()}, {"order", to_json_int(m.order())},
            {"exponent", to_json_int(m.exponent())}, {"components", comps}};
}

json cmd_eigen_filter(const CommandRequest& req) {
    auto s = adams_eigen_filter(need(req.p, "--p"), need(req.d, "--d"), need(req.ell, "--ell"), req.drop_j0);
    return {{"surviving", json(std::vector<std::uint64_t>(s.begin(), s.end()))}};
}

json cmd_bound(const CommandRequest& req) {
    auto g = input_group(req);
    auto r = annihilation_bound(g);
    auto k = kernel_group_order(sylow_report(g, 2));
    return {{"a", r.a},
            {"b", r.b},
            {"bound", to_json_int(r.bound)},
            {"sylow2_tag", r.sylow2_tag},
            {"sylow3_tag", r.sylow3_tag},
            {"kernel_group_order", k ? json(*k) : json("unknown")}};
}

json cmd_verify(const CommandRequest& req) {
    VerifyOptions opt;
    if (req.seed) opt.seed = *req.seed;
    if (req.trials) opt.trials = *req.trials;
    json suites = json::array();
    bool ok = true;
    for (const auto& r : run_verify(req.suite, opt)) {
        suites.push_back({{"name", r.name}, {"checks", r.checks}, {"failed", r.failed}, {"messages", r.messages}});
        ok = ok && r.ok();
    }
    return {{"ok", ok}, {"seed", opt.seed}, {"trials", opt.trials}, {"suites", suites}};
}

using Handler = json (*)(const CommandRequest&);

struct Entry {
    CommandSpec spec;
    Handler handler;
};

const std::vector<Entry>& entries() {
    const std::string character = R"(, "character"?: {"coeffs": [int]} | {"irreducible": i})";
    const std::string module = R"({"p": prime, "u"?: int, "rels": [[int]], "action": [[int]]})";
    const std::string complex =
        R"({"group": NAME|GROUP, "lowest_degree"?: int, "terms": [LATTICE without "group"], "differentials": [[[int]]]})";
    static const std::vector<Entry> e{
        {{"group-info", "orders, classes and Sylow types of a group", kGroupSchema, true}, cmd_group_info},
        {{"chartab", "character table", kGroupSchema, true}, cmd_chartab},
        {{"adams", "Adams operation psi^n on characters", std::string(kGroupSchema) + character, true}, cmd_adams},
        {{"spectrum", "prime ideals of the representation ring over p", std::string(kGroupSchema) + character, true},
         cmd_spectrum},
        {{"wedderburn", "rational Wedderburn components of an odd p-group", kGroupSchema, true}, cmd_wedderburn},
        {{"artin", "Artin exponent", kGroupSchema, true}, cmd_artin},
        {{"tensorpow", "tensor power of a complex with its symmetric group action", complex, false}, cmd_tensorpow},
        {{"fa", "cyclic power piece F_a", kLatticeSchema, false}, cmd_fa},
        {{"psi-cyclic", "module-level Adams operation F_0 - F_1", kLatticeSchema, false}, cmd_psi_cyclic},
        {{"zeta-check", "zeta o xi and zeta on free modules", kLatticeSchema, false}, cmd_zeta_check},
        {{"bernoulli", "Bernoulli numbers B_0 .. B_upto", "", false}, cmd_bernoulli},
        {{"herbrand", "Herbrand vanishing data at p", "", false}, cmd_herbrand},
        {{"irregular-scan", "irregular pairs (p, k) up to a bound", "", false}, cmd_irregular_scan},
        {{"prime-search", "primes ell generating (Z/p)^* with ell^(p-1) = 1 mod p^N", "", false}, cmd_prime_search},
        {{"eigen-decompose", "Teichmueller eigenspaces of a p-group module", module, false}, cmd_eigen_decompose},
        {{"eigen-filter", "eigenspaces surviving the annihilating operator", "", false}, cmd_eigen_filter},
        {{"bound", "annihilation bound 2^a 3^b", kGroupSchema, true}, cmd_bound},
        {{"verify", "property suites", "", false}, cmd_verify},
    };
    return e;
}

const Entry& entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.spec.name == name) return e;
    throw UsageError("unknown command " + name);
}

json provenance(const CommandRequest& req) {
    json args = json::object();
    auto put = [&](const char* k, const auto& v) {
        if (v) args[k] = *v;
    };
    put("group", req.group);
    put("n", req.n);
    put("p", req.p);
    put("ell", req.ell);
    put("a", req.a);
    put("d", req.d);
    put("upto", req.upto);
    put("bound", req.bound);
    put("N", req.capital_N);
    put("count", req.count);
    put("seed", req.seed);
    put("trials", req.trials);
    put("suite", req.suite);
    if (req.drop_j0) args["drop_j0"] = true;
    json out = {{"command", req.command}, {"arguments", args}, {"version", kVersion}};
    out["input_sha256"] = req.input.is_null() ? json(nullptr) : json(sha256_hex(canonical_json(req.input)));
    return out;
}

}  // namespace

const std::vector<CommandSpec>& command_specs() {
    static const std::vector<CommandSpec> specs = [] {
        std::vector<CommandSpec> out;
        for (const auto& e : entries()) out.push_back(e.spec);
        return out;
    }();
    return specs;
}

const CommandSpec& command_spec(const std::string& name) { return entry(name).spec; }

json run_command(const CommandRequest& req) { return entry(req.command).handler(req); }

CommandResult execute(const CommandRequest& req) {
    const auto start = std::chrono::steady_clock::now();
    json payload;
    std::string status = "ok";
    int code = 0;
    try {
        payload = run_command(req);
        if (req.command == "verify" && !payload.at("ok").get<bool>()) {
            status = "error";
            code = 1;
        }
    } catch (const UsageError& e) {
        std::string schema;
        for (const auto& s : command_specs())
            if (s.name == req.command) schema = s.input_schema;
        payload = {{"kind", "usage"}, {"message", e.what()}, {"schema", schema}};
        status = "error";
        code = 2;
    } catch (const SizeLimitError& e) {
        payload = {{"kind", "size_limit"}, {"message", e.what()}};
        status = "error";
        code = 1;
    } catch (const DomainError& e) {
        payload = {{"kind", "domain"}, {"message", e.what()}};
        status = "error";
        code = 1;
    } catch (const json::exception& e) {
        payload = {{"kind", "domain"}, {"message", std::string("malformed input: ") + e.what()}};
        status = "error";
        code = 1;
    } catch (const std::exception& e) {
        payload = {{"kind", "internal"}, {"message", e.what()}};
        status = "error";
        code = 1;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    json env = {{"status", status}, {"payload", payload}, {"timing_ms", ms}, {"provenance", provenance(req)}};
    return {env, code};
}

std::string canonical_json(const json& j) { return j.dump(); }

json to_json_int(const BigInt& v) {
    if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

json to_json_rational(const BigRational& v) {
    if (v.get_den() == 1) return v.get_num().get_str() + "/1";
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

json to_json_cyclotomic(const CyclotomicElement& v) {
    json coeffs = json::array();
    for (const auto& c : v.coeffs()) coeffs.push_back(to_json_rational(c));
    return {{"conductor", v.conductor()}, {"coeffs", coeffs}};
}

json to_json_character(const VirtualCharacter& chi) {
    json values = json::array();
    for (const auto& x : chi.values()) {
        json coeffs = json::array();
        for (const auto& c : x.coeffs()) coeffs.push_back(to_json_rational(c));
        values.push_back(coeffs);
    }
    return {{"coeffs", int_list(chi.coeffs())}, {"conductor", chi.table()->conductor()}, {"values", values}};
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::filesystem::path>& flag) {
    std::optional<std::filesystem::path> dir;
    if (const char* env = std::getenv("ADAMS_GALOIS_CACHE"); env && *env) {
        dir = env;
    } else if (flag) {
        dir = *flag;
    } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        dir = std::filesystem::path(xdg) / "adams-galois";
    } else if (const char* home = std::getenv("HOME"); home && *home) {
        dir = std::filesystem::path(home) / ".cache" / "adams-galois";
    }
    if (!dir) return std::nullopt;
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec || !std::filesystem::is_directory(*dir)) return std::nullopt;
    return dir;
}

}  // namespace adams
