#include <random>

#include "adams/cyclotomic.hpp"
#include "adams/error.hpp"
#include "adams/normal_form.hpp"
#include "doctest.h"

using namespace adams;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

// gcd of all k x k minors (determinantal divisors), brute force.
BigInt determinantal_divisor(const IntMatrix& m, std::size_t k) {
    std::vector<std::size_t> rs(k), cs(k);
    BigInt g = 0;
    std::function<void(std::size_t, std::size_t)> pick_cols;
    std::function<void(std::size_t, std::size_t)> pick_rows = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            pick_cols(0, 0);
            return;
        }
        for (std::size_t i = start; i < m.rows(); ++i) {
            rs[depth] = i;
            pick_rows(i + 1, depth + 1);
        }
    };
    pick_cols = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            IntMatrix sub(k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(rs[a], cs[b]);
            BigInt d = determinant(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
            return;
        }
        for (std::size_t j = start; j < m.cols(); ++j) {
            cs[depth] = j;
            pick_cols(j + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return g;
}

bool same_row_lattice(const IntMatrix& a, const IntMatrix& b) {
    RowLattice la(a), lb(b);
    for (std::size_t i = 0; i < a.rows(); ++i)
        if (!lb.contains(a.row(i))) return false;
    for (std::size_t i = 0; i < b.rows(); ++i)
        if (!la.contains(b.row(i))) return false;
    return true;
}

bool is_hermite(const IntMatrix& h) {
    std::size_t last_pivot = 0;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t p = h.cols();
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                p = j;
                break;
            }
        if (p == h.cols()) {
            seen_zero_row = true;
            continue;
        }
        if (seen_zero_row) return false;
        if (i > 0 && p <= last_pivot) return false;
        if (h(i, p) <= 0) return false;
        for (std::size_t k = 0; k < i; ++k)
            if (h(k, p) < 0 || h(k, p) >= h(i, p)) return false;
        last_pivot = p;
    }
    return true;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms") {
    auto q = make_rational(6, -4);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK(to_string(parse_rational("7")) == "7/1");
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
    CHECK_THROWS_AS(parse_rational("x/2"), DomainError);
}

TEST_CASE("rational field axioms hold on random samples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-50, 50);
    auto rnd = [&] {
        int den = 0;
        while (den == 0) den = d(rng);
        return make_rational(d(rng), den);
    };
    for (int t = 0; t < 200; ++t) {
        BigRational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a != 0) CHECK(a * (1 / a) == 1);
    }
}

TEST_CASE("machine number theory helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(1000000007ULL));
    CHECK_FALSE(is_prime(561));
    CHECK(euler_phi(36) == 12);
    CHECK(primitive_root(7) == 3);
    CHECK(multiplicative_order(2, 7) == 3);
    CHECK(inverse_mod(3, 7) == 5);
    CHECK(valuation(48, 2) == 4);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(9).size() == 7);
}

TEST_CASE("zeta^n = 1 and Phi_n(zeta) = 0 for many conductors") {
    for (std::uint32_t n = 1; n <= 40; ++n) {
        auto z = CyclotomicElement::zeta_power(n, 1);
        CHECK(z.pow(n) == CyclotomicElement(n, BigRational(1)));
        std::vector<BigRational> phi;
        for (const auto& c : cyclotomic_polynomial(n)) phi.emplace_back(c);
        CHECK(evaluate_polynomial(phi, z).is_zero());
        // proper powers are not 1
        for (std::uint32_t k = 1; k < n; ++k) CHECK_FALSE(z.pow(k) == CyclotomicElement(n, BigRational(1)));
    }
}

TEST_CASE("cyclo_embed") {
    SUBCASE("1 in Q(zeta_1) maps to 1 in Q(zeta_3)") {
        auto one = cyclo_embed(CyclotomicElement(1, BigRational(1)), 3);
        CHECK(one == CyclotomicElement(3, BigRational(1)));
    }
    SUBCASE("zeta_3 into Q(zeta_6) still satisfies x^2 + x + 1") {
        auto z = cyclo_embed(CyclotomicElement::zeta_power(3, 1), 6);
        CHECK(z == CyclotomicElement::zeta_power(6, 2));
        CHECK((z * z + z + CyclotomicElement(6, BigRational(1))).is_zero());
        // zeta_6^2 = zeta_6 - 1 in the power basis modulo x^2 - x + 1
        CHECK(z.coeff(0) == -1);
        CHECK(z.coeff(1) == 1);
    }
    SUBCASE("4 does not divide 6") {
        CHECK_THROWS_AS(cyclo_embed(CyclotomicElement::zeta_power(4, 1), 6), DomainError);
    }
    SUBCASE("restriction is inverse to embedding") {
        std::mt19937_64 rng(11);
        std::uniform_int_distribution<int> d(-9, 9);
        for (std::uint32_t m : {6u, 12u, 15u, 20u, 24u}) {
            for (std::uint32_t sub = 1; sub <= m; ++sub) {
                if (m % sub) continue;
                std::vector<BigRational> c(euler_phi(sub));
                for (auto& x : c) x = make_rational(d(rng), 1 + (d(rng) + 9) % 4);
                CyclotomicElement v(sub, c);
                auto up = cyclo_embed(v, m);
                CHECK(lies_in_subfield(up, sub));
                auto back = cyclo_restrict(up, sub);
                REQUIRE(back.has_value());
                CHECK(*back == v);
            }
        }
        CHECK_FALSE(lies_in_subfield(CyclotomicElement::zeta_power(12, 1), 4));
        CHECK_FALSE(cyclo_restrict(CyclotomicElement::zeta_power(12, 1), 6).has_value());
    }
}

TEST_CASE("cyclotomic field axioms and inverses") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> d(-5, 5);
    for (std::uint32_t n : {3u, 5u, 8u, 9u, 12u}) {
        auto rnd = [&] {
            std::vector<BigRational> c(euler_phi(n));
            for (auto& x : c) x = make_rational(d(rng), 1 + (d(rng) + 5) % 3);
            return CyclotomicElement(n, c);
        };
        for (int t = 0; t < 20; ++t) {
            auto a = rnd(), b = rnd(), c = rnd();
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == CyclotomicElement(n, BigRational(1)));
            // Galois automorphisms are ring maps
            CHECK((a * b).conj() == a.conj() * b.conj());
        }
    }
}

TEST_CASE("smith normal form examples") {
    auto f = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
    CHECK(f.D == IntMatrix{{1, 0}, {0, 6}});
    CHECK(smith_normal_form(IntMatrix::identity(4)).D == IntMatrix::identity(4));
    CHECK(smith_normal_form(IntMatrix{{0}}).D == IntMatrix{{0}});
    // oracle: d1 = gcd of entries, d1*d2 = |det|
    IntMatrix m{{2, 0}, {0, 3}};
    CHECK(determinantal_divisor(m, 1) == 1);
    CHECK(determinantal_divisor(m, 2) == 6);
}

TEST_CASE("smith normal form properties on random matrices") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        IntMatrix m = random_matrix(rng, r, c, 6);
        auto f = smith_normal_form(m);
        CHECK(f.U * m * f.V == f.D);
        CHECK(abs(determinant(f.U)) == 1);
        CHECK(abs(determinant(f.V)) == 1);
        CHECK(f.D.is_diagonal());
        std::size_t k = std::min(r, c);
        BigInt prod = 1;
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(f.D(i, i) >= 0);
            if (i + 1 < k && f.D(i, i) != 0) CHECK(f.D(i + 1, i + 1) % f.D(i, i) == 0);
            if (i + 1 < k && f.D(i, i) == 0) CHECK(f.D(i + 1, i + 1) == 0);
            prod *= f.D(i, i);
            CHECK(prod == determinantal_divisor(m, i + 1));
        }
        auto d = elementary_divisors(m);
        for (std::size_t i = 0; i < k; ++i) CHECK(d[i] == f.D(i, i));
    }
}

TEST_CASE("hermite normal form examples") {
    // [[1,3],[0,2]] spans the same lattice; reducing 3 into [0,2) gives the canonical form
    CHECK(hermite_normal_form(IntMatrix{{2, 4}, {1, 3}}) == IntMatrix{{1, 1}, {0, 2}});
    CHECK(hermite_normal_form(IntMatrix{{1, 3}, {0, 2}}) == IntMatrix{{1, 1}, {0, 2}});
    CHECK(hermite_normal_form(IntMatrix::identity(3)) == IntMatrix::identity(3));
    CHECK(hermite_normal_form(IntMatrix{{3}, {6}}) == IntMatrix{{3}, {0}});
    CHECK(same_row_lattice(IntMatrix{{2, 4}, {1, 3}}, IntMatrix{{1, 3}, {0, 2}}));
}

TEST_CASE("hermite normal form properties on random matrices") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 150; ++t) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, r, c, 8);
        auto f = hermite_with_transform(m);
        CHECK(f.U * m == f.H);
        CHECK(abs(determinant(f.U)) == 1);
        CHECK(is_hermite(f.H));
        CHECK(f.H == hermite_normal_form(m));
        CHECK(same_row_lattice(m, f.H));
        // uniqueness: HNF of a unimodular transform of m is the same
        IntMatrix w = random_matrix(rng, r, r, 2);
        if (abs(determinant(w)) == 1) CHECK(hermite_normal_form(w * m) == f.H);
    }
}

TEST_CASE("integer kernels are saturated") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        std::size_t r = 1 + rng() % 3, c = 1 + rng() % 5;
        IntMatrix m = random_matrix(rng, r, c, 5);
        IntMatrix k = integer_kernel(m);
        CHECK((m * k).is_zero());
        std::size_t rank = hermite_with_transform(m).rank;
        CHECK(k.cols() == c - rank);
        if (k.cols() > 0) {
            for (const auto& d : elementary_divisors(k)) CHECK(d == 1);
            IntMatrix l = left_inverse_of_saturated(k);
            CHECK(l * k == IntMatrix::identity(k.cols()));
        }
    }
    CHECK_THROWS_AS(left_inverse_of_saturated(IntMatrix{{2}, {0}}), DomainError);
}

TEST_CASE("row lattice membership") {
    RowLattice l(IntMatrix{{2, 0}, {0, 3}});
    CHECK(l.contains(std::vector<BigInt>{4, 3}));
    CHECK_FALSE(l.contains(std::vector<BigInt>{1, 0}));
    CHECK(*l.membership_index(std::vector<BigInt>{1, 1}) == 6);
    RowLattice line(IntMatrix{{1, 1}});
    CHECK_FALSE(line.membership_index(std::vector<BigInt>{1, 0}).has_value());
}

TEST_CASE("sparse matrices agree with dense arithmetic") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        IntMatrix a = random_matrix(rng, 3, 4, 2), b = random_matrix(rng, 4, 3, 2);
        auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b);
        CHECK((sa * sb).to_dense() == a * b);
        CHECK(trace_of_product(sa, sb) == (sa * sb).trace());
        CHECK((sa - sa).is_zero());
        CHECK(sa.transpose().to_dense() == a.transpose());
    }
    auto k = kronecker(SparseMatrix::from_dense(IntMatrix{{1, 2}, {3, 4}}), SparseMatrix::identity(2));
    CHECK(k.to_dense() == IntMatrix{{1, 0, 2, 0}, {0, 1, 0, 2}, {3, 0, 4, 0}, {0, 3, 0, 4}});
}
