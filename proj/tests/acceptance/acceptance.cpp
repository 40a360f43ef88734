// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "adams/chartheory.hpp"
#include "adams/cycloclass.hpp"
#include "adams/eigenact.hpp"
#include "adams/gring.hpp"
#include "adams/verify.hpp"

using namespace adams;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out{false, ""};
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        out.ok = false;
        out.detail += " time limit " + std::to_string(limit_seconds) + " s exceeded";
    }
    if (!out.ok) ++failures;
    std::printf("AC%-2d %s  %s  (%.2f s)%s%s\n", number, out.ok ? "PASS" : "FAIL", title.c_str(), secs,
                out.detail.empty() ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
}

// trace(m^ell) by dense multiplication
BigInt trace_of_power(const SparseMatrix& m, std::uint64_t ell) {
    IntMatrix d = m.to_dense();
    IntMatrix acc = IntMatrix::identity(d.rows());
    for (std::uint64_t i = 0; i < ell; ++i) acc = acc * d;
    BigInt t = 0;
    for (std::size_t i = 0; i < acc.rows(); ++i) t += acc(i, i);
    return t;
}

// sum_{a<p} a^k = p B_k mod p^2 for even k <= p - 3
bool power_sum_divisible(std::uint64_t p, std::uint64_t k) {
    const std::uint64_t m = p * p;
    std::uint64_t s = 0;
    for (std::uint64_t a = 1; a < p; ++a) s = (s + pow_mod(a, k, m)) % m;
    return s == 0;
}

// primes q with (q - 1) | k, by trial division
BigInt brute_denominator(std::uint64_t k) {
    BigInt d = 1;
    for (std::uint64_t q = 2; q <= k + 1; ++q) {
        bool prime = true;
        for (std::uint64_t f = 2; f * f <= q && prime; ++f) prime = q % f != 0;
        if (prime && k % (q - 1) == 0) d *= static_cast<unsigned long>(q);
    }
    return d;
}

bool brute_conditions(std::uint64_t p, std::uint64_t n, std::uint64_t ell) {
    if (ell == p) return false;
    std::uint64_t mod = 1;
    for (std::uint64_t i = 0; i < n; ++i) mod *= p;
    std::set<std::uint64_t> residues;
    std::uint64_t x = 1;
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
        residues.insert(x % p);
        x = x * (ell % mod) % mod;
    }
    return residues.size() == p - 1 && x % mod == 1 % mod;
}

std::string lattice_label(const std::string& g, const std::string& kind, std::uint64_t ell) {
    return g + "/" + kind + " ell=" + std::to_string(ell);
}

}  // namespace

int main() {
    criterion(1, "cyclic power psi equals character psi on the lattice corpus", 60, [] {
        std::size_t cases = 0;
        for (const auto& [g, kind] : GRingLattice::corpus_names()) {
            auto base = GRingLattice::corpus(g, kind);
            for (std::uint64_t ell : {3u, 5u}) {
                if (base.group().order() % ell == 0) continue;
                auto p = base.with_inverted_prime(ell);
                if (psi_cyclic_character(p, ell) != adams_character(static_cast<std::int64_t>(ell), p.character()))
                    return Outcome{false, lattice_label(g, kind, ell)};
                ++cases;
            }
        }
        return Outcome{cases > 0, std::to_string(cases) + " cases"};
    });

    criterion(2, "F0 - F1 fixes the regular character", 60, [] {
        for (const auto& [g, ell] : std::vector<std::pair<std::string, std::uint64_t>>{{"C2", 3}, {"C2", 5}, {"C3", 5}, {"S3", 5}}) {
            auto reg = GRingLattice::regular(corpus_group(g)).with_inverted_prime(ell);
            auto diff = fa_construct(reg, ell, 0).character() - fa_construct(reg, ell, 1).character();
            if (diff != VirtualCharacter::regular(reg.character().table()))
                return Outcome{false, g + " ell=" + std::to_string(ell)};
        }
        return Outcome{true, "4 cases"};
    });

    criterion(3, "trace of (sigma, g) on P^(x ell) equals chi_P(g^ell)", 0, [] {
        std::size_t cases = 0;
        for (const auto& [g, kind] : GRingLattice::corpus_names()) {
            auto p = GRingLattice::corpus(g, kind);
            for (std::uint64_t ell : {3u, 5u}) {
                if (p.group().order() % ell == 0) continue;
                for (Elem x = 0; x < p.group().order(); ++x) {
                    auto r = cyclic_trace_identity(p, ell, x);
                    if (r.lhs != r.rhs || r.lhs.to_rational() != BigRational(trace_of_power(p.matrix(x), ell)))
                        return Outcome{false, lattice_label(g, kind, ell) + " element " + std::to_string(x)};
                    ++cases;
                }
            }
        }
        return Outcome{true, std::to_string(cases) + " (lattice, element, ell) triples"};
    });

    criterion(4, "zeta o xi = (ell - 1) id and zeta(free) = 0", 0, [] {
        std::size_t cases = 0;
        for (const auto& [g, kind] : GRingLattice::corpus_names()) {
            auto m = GRingLattice::corpus(g, kind);
            for (std::uint64_t ell : {3u, 5u}) {
                if (m.group().order() % ell == 0) continue;
                const BigInt scale = static_cast<unsigned long>(ell - 1);
                if (zeta_map(AugmentedLattice::inflate(m, ell)) != m.character().scaled(scale))
                    return Outcome{false, "zeta o xi at " + lattice_label(g, kind, ell)};
                if (zeta_map(AugmentedLattice::free_cyclic(m, ell)) != VirtualCharacter::zero(m.character().table()))
                    return Outcome{false, "zeta(free) at " + lattice_label(g, kind, ell)};
                ++cases;
            }
        }
        return Outcome{true, std::to_string(cases) + " cases"};
    });

    criterion(5, "irregular pairs up to 150 and certificate(2) on [5, 500]", 120, [] {
        const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected{
            {37, 32}, {59, 44}, {67, 58}, {101, 68}, {103, 24}, {131, 22}, {149, 130}};
        auto scan = irregular_scan(150);
        if (scan != expected) return Outcome{false, "scan differs from the expected list"};
        auto table = bernoulli(148);
        for (std::uint64_t k = 2; k <= 148; k += 2)
            if (table.value(k).get_den() != brute_denominator(k))
                return Outcome{false, "denominator of B_" + std::to_string(k)};
        for (std::uint64_t p = 5; p <= 150; ++p) {
            if (!is_prime(p)) continue;
            for (std::uint64_t k = 2; k + 3 <= p; k += 2) {
                const bool listed = std::find(scan.begin(), scan.end(), std::make_pair(p, k)) != scan.end();
                if (listed != power_sum_divisible(p, k)) return Outcome{false, "power-sum check at (" + std::to_string(p) + ", " + std::to_string(k) + ")"};
            }
        }
        std::size_t primes = 0;
        for (std::uint64_t p = 5; p <= 500; ++p) {
            if (!is_prime(p)) continue;
            if (!herbrand_report(p).certificate(2)) return Outcome{false, "certificate(2) fails at " + std::to_string(p)};
            ++primes;
        }
        return Outcome{true, std::to_string(primes) + " primes certified"};
    });

    criterion(6, "prime search gives 7 for (5, 2) and 17 for (3, 2)", 5, [] {
        for (const auto& [p, n, want] : std::vector<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>{{5, 2, 7}, {3, 2, 17}}) {
            auto found = cft_prime_search(p, n, 1);
            if (found.size() != 1 || found[0].ell != want) return Outcome{false, "p = " + std::to_string(p)};
            if (!cft_conditions_hold(found[0]) || !brute_conditions(p, n, want)) return Outcome{false, "revalidation at p = " + std::to_string(p)};
            for (std::uint64_t q = 2; q < want; ++q)
                if (is_prime(q) && brute_conditions(p, n, q)) return Outcome{false, "smaller prime " + std::to_string(q) + " qualifies"};
        }
        return Outcome{true, ""};
    });

    criterion(7, "eigenspace filter leaves {2} for d = 1 without j = 0", 0, [] {
        std::size_t cases = 0;
        for (std::uint64_t p : {5u, 7u, 11u, 13u})
            for (std::uint64_t ell = 2; ell < 100; ++ell) {
                if (!is_prime(ell) || ell == p || multiplicative_order(ell % p, p) != p - 1) continue;
                if (adams_eigen_filter(p, 1, ell, true) != std::set<std::uint64_t>{2})
                    return Outcome{false, "p = " + std::to_string(p) + ", ell = " + std::to_string(ell)};
                ++cases;
            }
        return Outcome{cases > 0, std::to_string(cases) + " (p, ell) pairs"};
    });

    criterion(8, "Artin trivial-character index: 1 cyclic, 3 for C3xC3, 9 for Heis27", 60, [] {
        for (const auto& name : corpus_group_names()) {
            auto g = corpus_group(name);
            bool cyclic = false;
            for (Elem x = 0; x < g.order(); ++x) cyclic = cyclic || g.element_order(x) == g.order();
            if (!cyclic) continue;
            if (artin_exponent(g).trivial_char_index != 1) return Outcome{false, name};
        }
        if (artin_exponent(corpus_group("C3xC3")).trivial_char_index != 3) return Outcome{false, "C3xC3"};
        if (artin_exponent(corpus_group("Heis27")).trivial_char_index != 9) return Outcome{false, "Heis27"};
        return Outcome{true, ""};
    });

    criterion(9, "annihilation bounds S3 1, Q8 2, D4 1, Heis27 9", 0, [] {
        for (const auto& [name, want] : std::vector<std::pair<std::string, long>>{{"S3", 1}, {"Q8", 2}, {"D4", 1}, {"Heis27", 9}})
            if (annihilation_bound(corpus_group(name)).bound != want) return Outcome{false, name};
        return Outcome{true, ""};
    });

    criterion(10, "structural invariants under 1000 randomized trials, fixed seed", 0, [] {
        VerifyOptions opt;
        opt.trials = 1000;
        std::uint64_t checks = 0;
        for (const auto& r : run_verify(std::nullopt, opt)) {
            checks += r.checks;
            if (!r.ok()) return Outcome{false, r.name + ": " + (r.messages.empty() ? "" : r.messages.front())};
        }
        return Outcome{true, std::to_string(checks) + " checks, seed " + std::to_string(opt.seed)};
    });

    return failures == 0 ? 0 : 1;
}
