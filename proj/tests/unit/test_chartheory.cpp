#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "adams/chartheory.hpp"
#include "adams/error.hpp"
#include "adams/normal_form.hpp"
#include "doctest.h"

using namespace adams;

namespace {

std::size_t derived_subgroup_order(const FiniteGroup& g) {
    std::vector<Elem> comms;
    for (Elem a = 0; a < g.order(); ++a)
        for (Elem b = 0; b < g.order(); ++b) comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return generated_subgroup(g, comms).size();
}

CyclotomicElement rat(const CharacterTable& t, long v) { return CyclotomicElement(t.conductor(), BigRational(v)); }

// Fixed points of each class representative in the defining permutation action.
ClassFunction permutation_character(const CharacterTable& t) {
    const auto& g = t.group();
    std::vector<Permutation> elems(g.order());
    Permutation id(g.degree());
    std::iota(id.begin(), id.end(), 0u);
    // rebuild permutations of every element from the generators by BFS
    std::vector<bool> done(g.order(), false);
    elems[g.identity()] = id;
    done[g.identity()] = true;
    std::vector<Elem> queue{g.identity()};
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (std::size_t s = 0; s < g.generators().size(); ++s) {
            Elem y = g.mul(queue[h], g.generators()[s]);
            if (done[y]) continue;
            Permutation p(g.degree());
            for (std::size_t x = 0; x < p.size(); ++x) p[x] = elems[queue[h]][g.permutations()[s][x]];
            elems[y] = p;
            done[y] = true;
            queue.push_back(y);
        }
    ClassFunction f;
    for (const auto& c : g.conjugacy_classes()) {
        long fixed = 0;
        for (std::size_t x = 0; x < g.degree(); ++x) fixed += elems[c.representative][x] == x;
        f.push_back(rat(t, fixed));
    }
    return f;
}

std::size_t orbit_count(const FiniteGroup& g) {
    std::vector<std::size_t> parent(g.degree());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : g.permutations())
        for (std::size_t x = 0; x < p.size(); ++x) parent[find(x)] = find(p[x]);
    std::set<std::size_t> roots;
    for (std::size_t x = 0; x < g.degree(); ++x) roots.insert(find(x));
    return roots.size();
}

// Induced class function by definition: (1/|H|) sum_x lambda°(x g x^-1), H = <h>.
ClassFunction induce_by_definition(const CharacterTable& t, Elem h, std::uint64_t k) {
    const auto& g = t.group();
    const std::uint32_t o = g.element_order(h);
    const std::uint32_t e = t.conductor();
    std::map<Elem, std::uint64_t> exponent_of;
    Elem y = g.identity();
    for (std::uint32_t r = 0; r < o; ++r) {
        exponent_of[y] = r;
        y = g.mul(y, h);
    }
    ClassFunction f;
    for (const auto& c : g.conjugacy_classes()) {
        CyclotomicElement s(e);
        for (Elem x = 0; x < g.order(); ++x) {
            auto it = exponent_of.find(g.conjugate(c.representative, x));
            if (it != exponent_of.end())
                s += CyclotomicElement::zeta_power(e, static_cast<std::int64_t>((e / o) * k * it->second));
        }
        s *= BigRational(1, o);
        f.push_back(s);
    }
    return f;
}

// Order of v in Z^k / (column span of m), via Smith form.
BigInt order_in_cokernel(const IntMatrix& m, const std::vector<BigInt>& v) {
    auto f = smith_normal_form(m);
    auto uv = f.U.apply(v);
    BigInt result = 1;
    for (std::size_t i = 0; i < uv.size(); ++i) {
        BigInt d = i < std::min(f.D.rows(), f.D.cols()) ? BigInt(f.D(i, i)) : BigInt(0);
        if (d == 0) {
            REQUIRE(uv[i] == 0);
            continue;
        }
        BigInt gg = gcd(d, uv[i]);
        result = lcm(result, d / gg);
    }
    return result;
}

BigInt artin_index_oracle(const FiniteGroup& g) {
    auto t = CharacterTable::of(g);
    std::vector<std::vector<BigInt>> cols;
    for (Elem h = 0; h < g.order(); ++h)
        for (std::uint64_t k = 0; k < g.element_order(h); ++k) cols.push_back(t->decompose(induce_by_definition(*t, h, k)));
    IntMatrix m(t->size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < t->size(); ++i) m(i, j) = cols[j][i];
    std::vector<BigInt> triv(t->size(), 0);
    triv[0] = 1;
    return order_in_cokernel(m, triv);
}

}  // namespace

TEST_CASE("character table examples") {
    auto s3 = CharacterTable::of(corpus_group("S3"));
    std::vector<std::uint64_t> deg;
    for (std::size_t i = 0; i < s3->size(); ++i) deg.push_back(s3->degree(i));
    CHECK(deg == std::vector<std::uint64_t>{1, 1, 2});

    auto c1 = CharacterTable::of(corpus_group("C1"));
    CHECK(c1->size() == 1);
    CHECK(c1->irreducible(0)[0] == rat(*c1, 1));

    // C3: chi_k(g^j) = zeta_3^(kj), as a set of rows
    auto g3 = corpus_group("C3");
    auto c3 = CharacterTable::of(g3);
    CHECK(c3->conductor() == 3);
    REQUIRE(c3->size() == 3);
    Elem gen = g3.generators()[0];
    for (std::uint64_t k = 0; k < 3; ++k) {
        ClassFunction expect(3, CyclotomicElement(3));
        Elem y = g3.identity();
        for (std::int64_t j = 0; j < 3; ++j) {
            expect[g3.class_of(y)] = CyclotomicElement::zeta_power(3, static_cast<std::int64_t>(k) * j);
            y = g3.mul(y, gen);
        }
        CHECK(c3->find(expect).has_value());
    }
}

TEST_CASE("character tables pass independent oracles on the corpus") {
    for (const auto& name : corpus_group_names()) {
        CAPTURE(name);
        auto g = corpus_group(name);
        auto t = CharacterTable::of(g);
        REQUIRE(t->size() == g.conjugacy_classes().size());
        std::size_t linear = 0;
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < t->size(); ++i) {
            linear += t->degree(i) == 1;
            sum += t->degree(i) * t->degree(i);
            CHECK(g.order() % t->degree(i) == 0);
            CHECK(t->irreducible(i)[g.identity_class()] == rat(*t, static_cast<long>(t->degree(i))));
        }
        CHECK(sum == g.order());
        CHECK(linear == g.order() / derived_subgroup_order(g));
        // column orthogonality against brute-force centralizers
        for (std::size_t a = 0; a < t->size(); ++a)
            for (std::size_t b = 0; b < t->size(); ++b) {
                CyclotomicElement s(t->conductor());
                for (std::size_t i = 0; i < t->size(); ++i) s += t->irreducible(i)[a] * t->irreducible(i)[b].conj();
                std::size_t cent = 0;
                Elem x = g.conjugacy_classes()[a].representative;
                for (Elem h = 0; h < g.order(); ++h) cent += g.mul(h, x) == g.mul(x, h);
                CHECK(s == rat(*t, a == b ? static_cast<long>(cent) : 0));
            }
        // permutation character: nonnegative integral decomposition, <pi, 1> = orbit count
        if (g.degree() > 0) {
            auto pi = t->decompose(permutation_character(*t));
            for (const auto& c : pi) CHECK(c >= 0);
            CHECK(pi[0] == static_cast<unsigned long>(orbit_count(g)));
        }
        CHECK(galois_orbits(*t).size() == q_classes(g).size());
    }
}

TEST_CASE("Adams operations examples") {
    auto t = CharacterTable::of(corpus_group("S3"));
    auto chi2 = VirtualCharacter::irreducible(t, 2);
    auto psi2 = adams_character(2, chi2);
    auto one = VirtualCharacter::trivial(t), sgn = VirtualCharacter::irreducible(t, 1);
    CHECK(psi2 == one - sgn + chi2);
    // values (2, 2, -1) on e, transpositions, 3-cycles
    const auto& g = t->group();
    std::vector<long> expect(3);
    for (std::size_t c = 0; c < 3; ++c) {
        auto o = g.element_order(g.conjugacy_classes()[c].representative);
        expect[c] = o == 1 ? 2 : (o == 2 ? 2 : -1);
    }
    for (std::size_t c = 0; c < 3; ++c) CHECK(psi2.value(c) == rat(*t, expect[c]));
    CHECK(adams_character(1, chi2) == chi2);
    CHECK(adams_character(1 + static_cast<std::int64_t>(g.exponent()), chi2) == adams_character(1, chi2));
    CHECK(adams_compose_check(2, 3, chi2));
    CHECK(adams_compose_check(2, 3, sgn));
    CHECK(adams_compose_check(1, 17, chi2));
    CHECK(adams_compose_check(5, 5, chi2));
}

TEST_CASE("Adams operations are ring maps, compose, and fix the regular character") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (const std::string name : {"S3", "D4", "Q8", "Heis27", "C12", "SD16"}) {
        CAPTURE(name);
        auto t = CharacterTable::of(corpus_group(name));
        auto rnd = [&] {
            std::vector<BigInt> c(t->size());
            for (auto& x : c) x = coef(rng);
            return VirtualCharacter(t, c);
        };
        const auto e = static_cast<std::int64_t>(t->group().exponent());
        for (int trial = 0; trial < 4; ++trial) {
            auto a = rnd(), b = rnd();
            for (std::int64_t n : {-1L, 0L, 2L, 3L, 5L, 7L}) {
                CHECK(adams_character(n, a + b) == adams_character(n, a) + adams_character(n, b));
                CHECK(adams_character(n, a * b) == adams_character(n, a) * adams_character(n, b));
                CHECK(adams_character(n + e, a) == adams_character(n, a));
                for (std::int64_t m : {2L, 3L, -5L}) CHECK(adams_compose_check(n, m, a));
            }
        }
        auto reg = VirtualCharacter::regular(t);
        for (std::int64_t n = 1; n < 3 * e; ++n)
            if (std::gcd(n, static_cast<std::int64_t>(t->group().order())) == 1) CHECK(adams_character(n, reg) == reg);
    }
}

TEST_CASE("prime spectrum and ideal membership") {
    auto c2 = corpus_group("C2");
    CHECK(prime_spectrum(c2, 3).size() == 2);
    CHECK(prime_spectrum(c2, 2).size() == 1);
    for (const auto& name : corpus_group_names())
        for (std::uint64_t p : {0, 2, 3, 5, 7})
            CHECK(prime_spectrum(corpus_group(name), p).size() == p_regular_qclasses(corpus_group(name), p).size());

    auto t2 = CharacterTable::of(c2);
    auto reg = VirtualCharacter::regular(t2);
    auto spec3 = prime_spectrum(c2, 3);
    // rho_(sigma, 3): reg(sigma) = 0
    CHECK(ideal_membership(spec3[1], reg));
    auto g6 = corpus_group("S3");
    auto t6 = CharacterTable::of(g6);
    auto aug = VirtualCharacter::regular(t6) - VirtualCharacter::trivial(t6).scaled(6);
    for (std::uint64_t p : {0, 2, 5}) CHECK(ideal_membership(prime_spectrum(g6, p)[0], aug));
    CHECK_FALSE(ideal_membership(prime_spectrum(g6, 2)[0], VirtualCharacter::trivial(t6)));
    // 2 lies in every prime over 2, and 3 is a unit there
    CHECK(ideal_membership(prime_spectrum(g6, 2)[0], VirtualCharacter::trivial(t6).scaled(2)));
    CHECK_FALSE(ideal_membership(prime_spectrum(g6, 2)[0], VirtualCharacter::trivial(t6).scaled(3)));

    // C5 at p = 2: residue field F_16, zeta - 1 is a unit, 1 + zeta + ... + zeta^4 = 0
    auto g5 = corpus_group("C5");
    auto t5 = CharacterTable::of(g5);
    auto w = ideal_membership_detail(prime_spectrum(g5, 2)[1], VirtualCharacter::regular(t5));
    CHECK(w.member);
    CHECK(w.field_degree == 4);
    CHECK(w.field_modulus == std::vector<std::uint64_t>{1, 1, 0, 0, 1});
    auto lin = VirtualCharacter::irreducible(t5, 1) - VirtualCharacter::trivial(t5);
    for (const auto& ideal : prime_spectrum(g5, 2)) {
        bool at_identity = ideal.qclass.representative == g5.identity();
        CHECK(ideal_membership(ideal, lin) == at_identity);
    }
    // zeta_5 - 1 lies over 5
    CHECK(ideal_membership(prime_spectrum(g5, 5)[0], lin));
}

TEST_CASE("Wedderburn decomposition of odd p-groups") {
    auto w3 = wedderburn_pgroup(corpus_group("C3"), 3);
    REQUIRE(w3.size() == 2);
    CHECK(w3[0].matrix_size == 1);
    CHECK(w3[0].cyclotomic_level == 0);
    CHECK(w3[1].matrix_size == 1);
    CHECK(w3[1].cyclotomic_level == 1);

    auto wh = wedderburn_pgroup(corpus_group("Heis27"), 3);
    std::multiset<std::pair<std::uint64_t, unsigned>> shape;
    for (const auto& c : wh) shape.insert({c.matrix_size, c.cyclotomic_level});
    CHECK(shape == std::multiset<std::pair<std::uint64_t, unsigned>>{{1, 0}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {3, 1}});

    auto w1 = wedderburn_pgroup(corpus_group("C1"), 5);
    REQUIRE(w1.size() == 1);
    CHECK(w1[0].matrix_size == 1);
    CHECK(w1[0].cyclotomic_level == 0);

    auto w9 = wedderburn_pgroup(corpus_group("C9"), 3);
    std::multiset<unsigned> levels;
    for (const auto& c : w9) levels.insert(c.cyclotomic_level);
    CHECK(levels == std::multiset<unsigned>{0, 1, 2});
    wedderburn_pgroup(corpus_group("Heis125"), 5);

    CHECK_THROWS_AS(wedderburn_pgroup(corpus_group("S3"), 3), DomainError);
    CHECK_THROWS_AS(wedderburn_pgroup(corpus_group("Q8"), 2), DomainError);
}

TEST_CASE("Artin exponents") {
    auto c6 = artin_exponent(corpus_group("C6"));
    CHECK(c6.cokernel_exponent == 1);
    CHECK(c6.trivial_char_index == 1);
    CHECK(artin_exponent(corpus_group("Heis27")).trivial_char_index == 9);
    CHECK(artin_exponent(corpus_group("C3xC3")).trivial_char_index == 3);
    for (const std::string name : {"C3xC3", "Heis27", "S3", "Q8", "D4"}) {
        CAPTURE(name);
        CHECK(artin_exponent(corpus_group(name)).trivial_char_index == artin_index_oracle(corpus_group(name)));
    }
}

TEST_CASE("character tables are cached and size-limited") {
    auto g = corpus_group("D4");
    CHECK(CharacterTable::of(g).get() == CharacterTable::of(corpus_group("D4")).get());
    std::vector<std::int64_t> big;
    for (std::int64_t i = 1; i <= 2003; ++i) big.push_back(i);
    CHECK_THROWS_AS(CharacterTable::of(FiniteGroup::from_cycles("C2003", {{big}})), SizeLimitError);
}

TEST_CASE("cached tables follow the element numbering of each group") {
    // same generating set in two orders numbers the elements differently
    Permutation cycle{1, 2, 0}, swap{1, 0, 2};
    auto a = FiniteGroup::from_permutations("S3a", {cycle, swap}, 3);
    auto b = FiniteGroup::from_permutations("S3b", {swap, cycle}, 3);
    CHECK(a.hash() != b.hash());
    for (const auto* g : {&a, &b}) {
        auto t = CharacterTable::of(*g);
        for (std::size_t c = 0; c < g->conjugacy_classes().size(); ++c) {
            const Elem rep = g->conjugacy_classes()[c].representative;
            // the degree-2 character of S3 is (fixed points - 1)
            const auto& p = g->element_permutation(rep);
            std::size_t fixed = 0;
            for (std::size_t x = 0; x < 3; ++x) fixed += p[x] == x;
            BigInt deg2 = 0;
            for (std::size_t i = 0; i < t->size(); ++i)
                if (t->degree(i) == 2) deg2 = t->irreducible(i)[c].to_rational().get_num();
            CHECK(deg2 == BigInt(static_cast<long>(fixed)) - 1);
        }
    }
}
