#include <random>

#include "adams/error.hpp"
#include "adams/gring.hpp"
#include "doctest.h"

using namespace adams;

namespace {

BigInt ipow(std::size_t base, std::uint64_t e) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r *= static_cast<unsigned long>(base);
    return r;
}

// trace of m^ell by repeated dense multiplication
BigInt trace_of_power(const SparseMatrix& m, std::uint64_t ell) {
    IntMatrix d = m.to_dense();
    IntMatrix acc = IntMatrix::identity(d.rows());
    for (std::uint64_t i = 0; i < ell; ++i) acc = acc * d;
    BigInt t = 0;
    for (std::size_t i = 0; i < acc.rows(); ++i) t += acc(i, i);
    return t;
}

Elem long_cycle(const FiniteGroup& sym) {
    for (Elem e = 0; e < sym.order(); ++e) {
        const auto& p = sym.element_permutation(e);
        bool ok = true;
        for (std::size_t x = 0; x < p.size(); ++x) ok = ok && p[x] == (x + 1) % p.size();
        if (ok) return e;
    }
    FAIL("no long cycle");
    return 0;
}

BigInt aux_trace(const BoundedComplex& c, int degree, Elem a) { return c.aux_matrix(degree, a).trace(); }

// Right multiplication by sum_h coef[h] h on the regular lattice (commutes with the left action).
SparseMatrix right_multiplication(const FiniteGroup& g, const std::vector<long>& coef) {
    std::vector<std::tuple<std::size_t, std::size_t, BigInt>> trip;
    for (Elem x = 0; x < g.order(); ++x)
        for (Elem h = 0; h < g.order(); ++h)
            if (coef[h] != 0) trip.emplace_back(g.mul(x, h), x, BigInt(coef[h]));
    return SparseMatrix::from_triplets(g.order(), g.order(), std::move(trip));
}

GRingLattice zero_lattice(const FiniteGroup& g) {
    return GRingLattice(g, 0, std::vector<SparseMatrix>(g.generators().size(), SparseMatrix(0, 0)));
}

}  // namespace

TEST_CASE("lattice construction and characters") {
    auto s3 = corpus_group("S3");
    auto t = CharacterTable::of(s3);
    CHECK(GRingLattice::regular(s3).character() == VirtualCharacter::regular(t));
    CHECK(GRingLattice::trivial(s3, 3).character() == VirtualCharacter::trivial(t).scaled(BigInt(3)));
    auto aug = GRingLattice::augmentation(s3);
    CHECK(aug.rank() == 2);
    CHECK(GRingLattice::sign(s3).character().rank() == 1);
    CHECK(aug.character() + VirtualCharacter::trivial(t) == GRingLattice::permutation(s3).character());
    CHECK(aug.character().coeffs()[2] == 1);

    auto c2 = cyclic_group(2);
    SparseMatrix bad(1, 1);
    bad.set_column(0, {{0, BigInt(2)}});
    CHECK_THROWS_AS(GRingLattice(c2, 1, {bad}), DomainError);
    IntMatrix unstable{{1}, {0}};
    CHECK_THROWS_AS(GRingLattice::regular(c2).restrict_to(unstable), DomainError);
    CHECK_THROWS_AS(GRingLattice::sign(cyclic_group(3)), DomainError);

    auto j = aug.to_json();
    auto back = GRingLattice::from_json(j);
    CHECK(back.rank() == 2);
    CHECK(back.character() == aug.character());
    CHECK(back.generator_matrices() == aug.generator_matrices());
    CHECK_THROWS_AS(GRingLattice::from_json(nlohmann::json{{"group", "S3"}, {"rank", 1}}), DomainError);

    auto sum = GRingLattice::direct_sum(aug, GRingLattice::trivial(s3));
    CHECK(sum.character() == GRingLattice::permutation(s3).character());
}

TEST_CASE("tensor square of the two-term zero complex") {
    auto g = cyclic_group(1);
    auto r = GRingLattice::trivial(g);
    BoundedComplex c(0, {r, r}, {SparseMatrix(1, 1)});
    auto t2 = tensor_power_complex(c, 2);
    REQUIRE(t2.lowest_degree() == 0);
    REQUIRE(t2.highest_degree() == 2);
    CHECK(t2.term(0).rank() == 1);
    CHECK(t2.term(1).rank() == 2);
    CHECK(t2.term(2).rank() == 1);
    const Elem swap = long_cycle(t2.aux());
    CHECK(t2.aux_matrix(2, swap).at(0, 0) == -1);
    CHECK(aux_trace(t2, 0, swap) == 1);
    CHECK(aux_trace(t2, 1, swap) == 0);

    auto e = euler_character(t2);
    auto ta = e.aux;
    // triv - reg + sgn: degree 0 trivial, degree 1 regular, degree 2 sign
    IntMatrix by_hand(2, 1);
    by_hand(0, 0) = 1 - 1;
    by_hand(1, 0) = -1 + 1;
    CHECK(e.coeffs == by_hand);
    CHECK(e.rank() == 0);
    REQUIRE(ta->size() == 2);
    CHECK(ta->irreducible(1)[ta->group().class_of(swap)].to_rational() == -1);

    auto t1 = tensor_power_complex(c, 1);
    CHECK(t1.length() == 2);
    CHECK(t1.aux().order() == 1);
    CHECK(euler_character(t1).coeffs.is_zero());
}

TEST_CASE("tensor powers of complexes in degree zero carry unsigned permutations") {
    auto s3 = corpus_group("S3");
    BoundedComplex c(0, {GRingLattice::augmentation(s3)}, {});
    auto t3 = tensor_power_complex(c, 3);
    REQUIRE(t3.length() == 1);
    CHECK(t3.term(0).rank() == 8);
    for (Elem a = 0; a < t3.aux().order(); ++a) {
        const auto& m = t3.aux_matrix(0, a);
        for (std::size_t col = 0; col < m.cols(); ++col) {
            REQUIRE(m.column(col).size() == 1);
            CHECK(m.column(col)[0].second == 1);
        }
    }
    CHECK_THROWS_AS(tensor_power_complex(BoundedComplex(0, {GRingLattice::trivial(s3, 1001)}, {}), 2), SizeLimitError);
}

TEST_CASE("complex invariants are enforced") {
    auto c2 = cyclic_group(2);
    auto r = GRingLattice::regular(c2);
    auto n = right_multiplication(c2, {1, 1});
    auto d = right_multiplication(c2, {1, -1});
    CHECK_NOTHROW(BoundedComplex(0, {r, r, r}, {d, n}));
    CHECK_THROWS_AS(BoundedComplex(0, {r, r, r}, {d, d}), DomainError);
    SparseMatrix not_equivariant = SparseMatrix::from_triplets(2, 2, {{0, 0, BigInt(1)}});
    CHECK_THROWS_AS(BoundedComplex(0, {r, r}, {not_equivariant}), DomainError);
    auto t3 = tensor_power_complex(BoundedComplex(0, {r, r, r}, {d, n}), 3);
    CHECK(t3.length() == 7);
    for (int k = t3.lowest_degree(); k + 1 < t3.highest_degree(); ++k)
        CHECK((t3.differential(k + 1) * t3.differential(k)).is_zero());
}

TEST_CASE("cyclic power ranks and small examples") {
    auto one = cyclic_group(1);
    auto p = GRingLattice::trivial(one).with_inverted_prime(3);
    CHECK(fa_construct(p, 3, 0).rank() == 1);
    CHECK(fa_construct(p, 3, 1).rank() == 0);
    CHECK_THROWS_AS(fa_construct(GRingLattice::trivial(one), 3, 0), DomainError);
    CHECK_THROWS_AS(fa_construct(GRingLattice::regular(cyclic_group(3)).with_inverted_prime(3), 3, 0), DomainError);
    CHECK_THROWS_AS(fa_construct(GRingLattice::trivial(one, 11).with_inverted_prime(5), 5, 0), SizeLimitError);

    auto c2 = cyclic_group(2);
    auto t2 = CharacterTable::of(c2);
    for (std::uint64_t ell : {3u, 5u}) {
        auto reg = GRingLattice::regular(c2).with_inverted_prime(ell);
        auto f0 = fa_construct(reg, ell, 0), f1 = fa_construct(reg, ell, 1);
        // free sigma-orbits contribute one rank each, fixed tuples only to F_0
        BigInt free_orbits = (ipow(2, ell) - 2) / static_cast<unsigned long>(ell);
        CHECK(BigInt(static_cast<unsigned long>(f1.rank())) == free_orbits);
        CHECK(BigInt(static_cast<unsigned long>(f0.rank())) == free_orbits + 2);
        CHECK(f0.character() - f1.character() == VirtualCharacter::regular(t2));
        CHECK(fa_construct(reg, ell, 2).character() == f1.character());
    }
    auto sgn = GRingLattice::sign(c2).with_inverted_prime(3);
    CHECK(psi_cyclic_character(sgn, 3) == adams_character(3, sgn.character()));
    CHECK(psi_cyclic_character(sgn, 3) == sgn.character());

    auto s3 = corpus_group("S3");
    auto t3 = CharacterTable::of(s3);
    auto aug = GRingLattice::augmentation(s3).with_inverted_prime(5);
    // element orders in S3 are 1, 2, 3, so g^5 is conjugate to g and psi^5 fixes chi_2
    CHECK(psi_cyclic_character(aug, 5) == aug.character());
    auto square = VirtualCharacter::trivial(t3) - GRingLattice::sign(s3).character() + aug.character();
    CHECK(adams_character(2, aug.character()) == square);
    CHECK(psi_cyclic_character(GRingLattice::trivial(s3, 2).with_inverted_prime(5), 5) ==
          VirtualCharacter::trivial(t3).scaled(BigInt(2)));
}

TEST_CASE("cyclic power characters agree with Adams operations on the corpus") {
    for (const auto& [group, kind] : GRingLattice::corpus_names()) {
        for (std::uint64_t ell : {3u, 5u}) {
            auto base = GRingLattice::corpus(group, kind);
            if (base.group().order() % ell == 0) continue;
            auto p = base.with_inverted_prime(ell);
            INFO(group << " " << kind << " ell=" << ell);
            CHECK(psi_cyclic_character(p, ell) == adams_character(static_cast<std::int64_t>(ell), p.character()));
        }
    }
}

TEST_CASE("trace of the cyclic shift composed with the diagonal action") {
    auto c2 = cyclic_group(2);
    auto sgn = GRingLattice::sign(c2);
    auto id = cyclic_trace_identity(sgn, 3, 1);
    CHECK(id.lhs.to_rational() == -1);
    CHECK(id.rhs.to_rational() == -1);

    auto s3 = corpus_group("S3");
    auto reg = GRingLattice::regular(s3);
    Elem three_cycle = 0;
    while (s3.element_order(three_cycle) != 3) ++three_cycle;
    auto r = cyclic_trace_identity(reg, 5, three_cycle);
    CHECK(r.lhs.is_zero());
    CHECK(r.rhs.is_zero());
    auto e = cyclic_trace_identity(reg, 5, s3.identity());
    CHECK(e.lhs.to_rational() == 6);

    for (const auto& [group, kind] : GRingLattice::corpus_names()) {
        auto p = GRingLattice::corpus(group, kind);
        for (std::uint64_t ell : {3u, 5u}) {
            if (p.group().order() % ell == 0) continue;
            for (Elem g = 0; g < p.group().order(); ++g) {
                auto res = cyclic_trace_identity(p, ell, g);
                CHECK(res.lhs == res.rhs);
                CHECK(res.lhs.to_rational() == BigRational(trace_of_power(p.matrix(g), ell)));
            }
        }
    }
    CHECK_THROWS_AS(cyclic_trace_identity(reg, 3, 0), DomainError);
}

TEST_CASE("zeta and xi maps") {
    auto one = cyclic_group(1);
    auto triv = CharacterTable::of(one);
    for (std::uint64_t ell : {3u, 5u}) {
        auto twist = AugmentedLattice::cyclotomic_twist(GRingLattice::trivial(one), ell, 1);
        CHECK(zeta_map(twist) == VirtualCharacter::trivial(triv).scaled(-BigInt(static_cast<unsigned long>(ell - 1))));
    }
    for (const auto& [group, kind] : GRingLattice::corpus_names()) {
        auto m = GRingLattice::corpus(group, kind);
        for (std::uint64_t ell : {3u, 5u}) {
            if (m.group().order() % ell == 0) continue;
            INFO(group << " " << kind << " ell=" << ell);
            CHECK(zeta_map(AugmentedLattice::inflate(m, ell)) ==
                  m.character().scaled(BigInt(static_cast<unsigned long>(ell - 1))));
            CHECK(zeta_map(AugmentedLattice::free_cyclic(m, ell)).coeffs() ==
                  VirtualCharacter::zero(m.character().table()).coeffs());
        }
    }
}

TEST_CASE("product characters of auxiliary actions") {
    auto s3 = corpus_group("S3");
    auto aug = GRingLattice::augmentation(s3);
    auto free = lattice_product_character(AugmentedLattice::free_cyclic(aug, 5));
    REQUIRE(free.coeffs.rows() == 5);
    for (std::size_t j = 0; j < 5; ++j) CHECK(free.component(j) == aug.character());
    CHECK(in_free_ideal(free));
    auto inflated = lattice_product_character(AugmentedLattice::inflate(aug, 5));
    CHECK(inflated == inflate_character(inflated.aux, aug.character()));
    CHECK_FALSE(in_free_ideal(inflated));
    CHECK(inflated.rank() == 2);
}

TEST_CASE("tensor power operation agrees with Adams operations modulo the free class") {
    std::mt19937_64 rng(20261014);
    struct Setup {
        std::string group;
        std::uint64_t ell;
    };
    const std::vector<Setup> setups{{"C2", 3}, {"C4", 3}, {"C1", 5}, {"C2", 5}};
    int pairs = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const auto& st = setups[static_cast<std::size_t>(trial) % setups.size()];
        auto g = corpus_group(st.group);
        auto pick = [&]() {
            switch (rng() % 3) {
                case 0: return GRingLattice::trivial(g);
                case 1: return g.order() > 1 ? GRingLattice::sign(g) : GRingLattice::trivial(g);
                default: return GRingLattice::regular(g);
            }
        };
        auto x = pick();
        auto z = st.ell == 5 ? GRingLattice::trivial(g) : pick();
        // [X + Z -> Z] with projection onto Z, against [X -> 0]
        auto xz = GRingLattice::direct_sum(x, z);
        std::vector<std::tuple<std::size_t, std::size_t, BigInt>> proj;
        for (std::size_t i = 0; i < z.rank(); ++i) proj.emplace_back(i, x.rank() + i, BigInt(1));
        BoundedComplex a(0, {xz, z}, {SparseMatrix::from_triplets(z.rank(), xz.rank(), std::move(proj))});
        BoundedComplex b(0, {x, zero_lattice(g)}, {SparseMatrix(0, x.rank())});
        std::vector<BoundedComplex> pair{a, b};
        if (st.ell == 3 && trial % 2 == 1) {
            // [R -> R] by right multiplication by a random group ring element, against the zero map
            auto r = GRingLattice::regular(g);
            std::vector<long> coef(g.order());
            for (auto& v : coef) v = static_cast<long>(rng() % 5) - 2;
            pair = {BoundedComplex(0, {r, r}, {right_multiplication(g, coef)}),
                    BoundedComplex(0, {r, r}, {SparseMatrix(r.rank(), r.rank())})};
        }
        std::vector<ProductCharacter> euler;
        for (const auto& c : pair) {
            auto t = tensor_power_complex(c, st.ell);
            auto cyc = t.restrict_aux_to_cyclic(long_cycle(t.aux()));
            euler.push_back(euler_character(cyc));
            // tau^ell minus inflated psi^ell of the Euler class lies in (v)
            auto chi = c.term(0).character() - c.term(1).character();
            auto psi = adams_character(static_cast<std::int64_t>(st.ell), chi);
            CHECK(in_free_ideal(euler.back() - inflate_character(euler.back().aux, psi)));
        }
        CHECK(in_free_ideal(euler[0] - euler[1]));
        ++pairs;
    }
    CHECK(pairs >= 10);
}

TEST_CASE("free basis search") {
    auto c2 = cyclic_group(2);
    auto reg = GRingLattice::regular(c2);
    auto basis = find_free_basis(reg);
    REQUIRE(basis.has_value());
    REQUIRE(basis->size() == 1);
    IntMatrix m(2, 2);
    for (Elem g = 0; g < 2; ++g) {
        auto col = reg.matrix(g).apply((*basis)[0]);
        for (std::size_t i = 0; i < 2; ++i) m(i, g) = col[i];
    }
    CHECK(abs(determinant(m)) == 1);

    auto split = GRingLattice::direct_sum(GRingLattice::trivial(c2), GRingLattice::sign(c2));
    CHECK_FALSE(find_free_basis(split.with_inverted_prime(3)).has_value());
    CHECK(find_free_basis(split.with_inverted_prime(2)).has_value());

    auto c3 = cyclic_group(3);
    auto two = GRingLattice::direct_sum(GRingLattice::regular(c3), GRingLattice::regular(c3));
    auto b2 = find_free_basis(two);
    REQUIRE(b2.has_value());
    CHECK(b2->size() == 2);
    CHECK_FALSE(find_free_basis(GRingLattice::augmentation(corpus_group("S3"))).has_value());
}
