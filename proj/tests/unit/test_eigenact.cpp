#include <random>

#include "adams/eigenact.hpp"
#include "adams/error.hpp"
#include "adams/normal_form.hpp"
#include "doctest.h"

using namespace adams;

namespace {

IntMatrix diag(const std::vector<BigInt>& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

BigInt pw(std::uint64_t p, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= static_cast<unsigned long>(p);
    return r;
}

// Random unimodular matrix as a product of elementary operations, with its inverse.
std::pair<IntMatrix, IntMatrix> random_unimodular(std::size_t n, std::mt19937_64& rng) {
    IntMatrix a = IntMatrix::identity(n), inv = IntMatrix::identity(n);
    for (int step = 0; step < 6 && n > 1; ++step) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        long c = static_cast<long>(rng() % 5) - 2;
        IntMatrix e = IntMatrix::identity(n), f = IntMatrix::identity(n);
        e(i, j) = c;
        f(i, j) = -c;
        a = e * a;
        inv = inv * f;
    }
    return {a, inv};
}

}  // namespace

TEST_CASE("eigenspace examples") {
    // Z/5 with u = 2 acting by 2^2
    EigenModule m5(5, IntMatrix{{5}}, IntMatrix{{4}});
    CHECK(m5.generator() == 2);
    auto d5 = eigen_decompose(m5);
    for (const auto& [i, c] : d5.components) CHECK(c.order == (i == 2 ? 5 : 1));

    BigInt w = teichmuller(2, 5, 25);
    CHECK(w == 7);
    BigInt w3 = w * w * w % 25;
    EigenModule m25(5, IntMatrix{{25}}, diag({w3}));
    auto d25 = eigen_decompose(m25);
    CHECK(d25.components.at(3).order == 25);
    CHECK(d25.components.at(3).invariants == std::vector<BigInt>{25});
    CHECK(d25.components.at(0).order == 1);

    BigInt t = teichmuller(3, 7, 7);
    EigenModule m7(7, diag({7, 7}), diag({t, t * t * t * t % 7}));
    auto d7 = eigen_decompose(m7);
    for (const auto& [i, c] : d7.components) CHECK(c.order == ((i == 1 || i == 4) ? 7 : 1));

    CHECK_THROWS_AS(EigenModule(5, IntMatrix{{5}}, IntMatrix{{5}}), DomainError);
    CHECK_THROWS_AS(EigenModule(5, IntMatrix{{10}}, IntMatrix{{1}}), DomainError);
    CHECK_THROWS_AS(EigenModule(5, IntMatrix(0, 1), IntMatrix{{1}}), DomainError);
    CHECK_THROWS_AS(EigenModule(4, IntMatrix{{4}}, IntMatrix{{1}}), DomainError);
    // x -> 2x on Z/25 has order 20, not dividing 4
    CHECK_THROWS_AS(EigenModule(5, IntMatrix{{25}}, IntMatrix{{2}}), DomainError);
    // swaps the two generators of Z/5 + Z/25: not an endomorphism
    CHECK_THROWS_AS(EigenModule(5, diag({5, 25}), IntMatrix{{0, 1}, {1, 0}}), DomainError);

    auto j = m7.to_json();
    auto back = EigenModule::from_json(j);
    CHECK(back.order() == 49);
    CHECK_THROWS_AS(EigenModule::from_json(nlohmann::json{{"p", 5}}), DomainError);
}

TEST_CASE("eigen decomposition reconstructs disguised diagonal modules") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11}[trial % 4];
        const std::size_t n = 1 + rng() % 4;
        std::vector<unsigned> k(n);
        std::vector<std::uint64_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) {
            k[i] = 1 + static_cast<unsigned>(rng() % 3);
            idx[i] = rng() % (p - 1);
        }
        unsigned kmax = *std::max_element(k.begin(), k.end());
        BigInt big = pw(p, kmax);
        BigInt w = teichmuller(primitive_root(p), p, big);
        std::vector<BigInt> rel, act;
        for (std::size_t i = 0; i < n; ++i) {
            rel.push_back(pw(p, k[i]));
            BigInt v;
            mpz_powm_ui(v.get_mpz_t(), w.get_mpz_t(), idx[i], big.get_mpz_t());
            act.push_back(v);
        }
        // row vectors y -> y a carry the diagonal relations to diag * a; columns transform by a^T
        auto [a, inv] = random_unimodular(n, rng);
        IntMatrix rels = diag(rel) * a;
        IntMatrix action = a.transpose() * diag(act) * inv.transpose();
        EigenModule m(p, rels, action);
        auto dec = eigen_decompose(m);
        BigInt total = 1;
        for (const auto& [i, c] : dec.components) {
            BigInt expect = 1;
            for (std::size_t q = 0; q < n; ++q)
                if (idx[q] == i) expect *= pw(p, k[q]);
            CHECK(c.order == expect);
            total *= c.order;
            IntMatrix sq = c.idempotent * c.idempotent - c.idempotent;
            CHECK(m.columns_vanish(sq));
            // u acts on M^(i) by omega(u)^i
            BigInt wi;
            mpz_powm_ui(wi.get_mpz_t(), w.get_mpz_t(), i, big.get_mpz_t());
            IntMatrix scaled = c.generators;
            for (std::size_t r = 0; r < scaled.rows(); ++r)
                for (auto& x : scaled.row(r)) x *= wi;
            CHECK(m.columns_vanish(m.action() * c.generators - scaled));
        }
        CHECK(total == m.order());
    }
}

TEST_CASE("Adams eigenvalue filter") {
    CHECK(adams_eigen_filter(5, 1, 7, true) == std::set<std::uint64_t>{2});
    CHECK(adams_eigen_filter(5, 1, 7, false) == std::set<std::uint64_t>{1, 2});
    CHECK(adams_eigen_filter(7, 0, 3, false) == std::set<std::uint64_t>{1});
    CHECK(adams_eigen_filter(7, 0, 3, true).empty());
    CHECK_THROWS_AS(adams_eigen_filter(5, 1, 11, true), DomainError);
    CHECK_THROWS_AS(adams_eigen_filter(5, 1, 5, true), DomainError);
    CHECK(annihilator_multiplier(7, 1) == 36);

    for (std::uint64_t p : {5u, 7u, 11u, 13u}) {
        for (std::uint64_t d = 0; d <= 4; ++d) {
            for (bool drop : {false, true}) {
                std::optional<std::set<std::uint64_t>> first;
                for (std::uint64_t ell = 2; ell < 100; ++ell) {
                    if (!is_prime(ell) || ell == p || multiplicative_order(ell % p, p) != p - 1) continue;
                    auto s = adams_eigen_filter(p, d, ell, drop);
                    if (!first) first = s;
                    CHECK(s == *first);
                    std::set<std::uint64_t> oracle;
                    for (std::uint64_t j = drop ? 1 : 0; j <= d; ++j) oracle.insert((j + 1) % (p - 1));
                    CHECK(s == oracle);
                }
            }
        }
    }
}

TEST_CASE("annihilation bounds") {
    auto check = [](const std::string& name, std::uint64_t a, std::uint64_t b, long bound) {
        auto r = annihilation_bound(corpus_group(name));
        INFO(name);
        CHECK(r.a == a);
        CHECK(r.b == b);
        CHECK(r.bound == bound);
    };
    check("S3", 0, 0, 1);
    check("Q8", 1, 0, 2);
    check("D4", 0, 0, 1);
    check("Heis27", 0, 2, 9);
    check("C8", 0, 0, 1);
    check("C16", 1, 0, 2);
    check("D8", 0, 0, 1);
    check("SD16", 1, 0, 2);
    check("C3xC3", 0, 0, 1);
    auto r = annihilation_bound(FiniteGroup::direct_product(corpus_group("D4"), cyclic_group(2)));
    CHECK(r.a == 5);
    CHECK(r.bound == 32);
}
