#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "adams/chartheory.hpp"
#include "adams/error.hpp"
#include "adams/finite_field.hpp"
#include "adams/normal_form.hpp"

namespace adams {

VirtualCharacter::VirtualCharacter(std::shared_ptr<const CharacterTable> table, std::vector<BigInt> coeffs)
    : table_(std::move(table)), coeffs_(std::move(coeffs)) {
    require(coeffs_.size() == table_->size(), "virtual character has the wrong number of coefficients");
}

VirtualCharacter VirtualCharacter::zero(std::shared_ptr<const CharacterTable> table) {
    std::vector<BigInt> c(table->size(), 0);
    return VirtualCharacter(std::move(table), std::move(c));
}

VirtualCharacter VirtualCharacter::irreducible(std::shared_ptr<const CharacterTable> table, std::size_t i) {
    require(i < table->size(), "irreducible index out of range");
    std::vector<BigInt> c(table->size(), 0);
    c[i] = 1;
    return VirtualCharacter(std::move(table), std::move(c));
}

VirtualCharacter VirtualCharacter::trivial(std::shared_ptr<const CharacterTable> table) {
    return irreducible(std::move(table), 0);
}

VirtualCharacter VirtualCharacter::regular(std::shared_ptr<const CharacterTable> table) {
    std::vector<BigInt> c;
    for (std::size_t i = 0; i < table->size(); ++i) c.emplace_back(static_cast<unsigned long>(table->degree(i)));
    return VirtualCharacter(std::move(table), std::move(c));
}

VirtualCharacter VirtualCharacter::from_values(std::shared_ptr<const CharacterTable> table, const ClassFunction& f) {
    auto c = table->decompose(f);
    return VirtualCharacter(std::move(table), std::move(c));
}

CyclotomicElement VirtualCharacter::value(std::size_t cls) const {
    CyclotomicElement s(table_->conductor());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) s += table_->irreducible(i)[cls] * BigRational(coeffs_[i]);
    return s;
}

ClassFunction VirtualCharacter::values() const {
    ClassFunction out;
    for (std::size_t c = 0; c < table_->size(); ++c) out.push_back(value(c));
    return out;
}

BigInt VirtualCharacter::rank() const {
    BigInt r = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r += coeffs_[i] * static_cast<unsigned long>(table_->degree(i));
    return r;
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
    require(table_ == o.table_, "virtual characters of different groups");
    auto c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coeffs_[i];
    return VirtualCharacter(table_, std::move(c));
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
    require(table_ == o.table_, "virtual characters of different groups");
    auto c = coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coeffs_[i];
    return VirtualCharacter(table_, std::move(c));
}

VirtualCharacter VirtualCharacter::operator*(const VirtualCharacter& o) const {
    require(table_ == o.table_, "virtual characters of different groups");
    auto a = values(), b = o.values();
    for (std::size_t c = 0; c < a.size(); ++c) a[c] *= b[c];
    return from_values(table_, a);
}

VirtualCharacter VirtualCharacter::scaled(const BigInt& s) const {
    auto c = coeffs_;
    for (auto& x : c) x *= s;
    return VirtualCharacter(table_, std::move(c));
}

ClassFunction adams_values(const CharacterTable& t, std::int64_t n, const ClassFunction& f) {
    auto pm = t.group().power_map(n);
    ClassFunction out;
    for (std::size_t c = 0; c < f.size(); ++c) out.push_back(f[pm[c]]);
    return out;
}

VirtualCharacter adams_character(std::int64_t n, const VirtualCharacter& chi) {
    return VirtualCharacter::from_values(chi.table(), adams_values(*chi.table(), n, chi.values()));
}

bool adams_compose_check(std::int64_t a, std::int64_t b, const VirtualCharacter& chi) {
    const auto& t = *chi.table();
    const auto e = static_cast<__int128>(t.group().exponent());
    auto ab = static_cast<std::int64_t>((static_cast<__int128>(a) % e) * (static_cast<__int128>(b) % e) % e);
    auto lhs = adams_values(t, a, adams_values(t, b, chi.values()));
    return lhs == adams_values(t, ab, chi.values());
}

std::vector<std::vector<std::size_t>> galois_orbits(const CharacterTable& t) {
    const std::size_t k = t.size();
    const std::uint64_t e = t.group().exponent();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::uint64_t s = 2; s < e; ++s) {
        if (gcd_u64(s, e) != 1) continue;
        for (std::size_t i = 0; i < k; ++i) {
            auto img = t.find(adams_values(t, static_cast<std::int64_t>(s), t.irreducible(i)));
            ensure(img.has_value(), "Galois conjugate of an irreducible is not irreducible");
            std::size_t a = find(i), b = find(*img);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < k; ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    return out;
}

std::vector<VirtualCharacter> rational_orbit_sums(const std::shared_ptr<const CharacterTable>& t) {
    std::vector<VirtualCharacter> out;
    for (const auto& orbit : galois_orbits(*t)) {
        std::vector<BigInt> c(t->size(), 0);
        for (auto i : orbit) c[i] = 1;
        out.emplace_back(t, std::move(c));
    }
    return out;
}

std::vector<PrimeIdealRQ> prime_spectrum(const FiniteGroup& g, std::uint64_t p) {
    std::vector<PrimeIdealRQ> out;
    for (auto& q : p_regular_qclasses(g, p)) out.push_back({std::move(q), p});
    return out;
}

MembershipWitness ideal_membership_detail(const PrimeIdealRQ& ideal, const VirtualCharacter& chi) {
    const auto& g = chi.table()->group();
    MembershipWitness w{false, chi.value(g.class_of(ideal.qclass.representative)), 0, 0, {}, {}, {}};
    const std::uint64_t p = ideal.residue_char;
    if (p == 0) {
        w.member = w.value.is_zero();
        return w;
    }
    require(g.element_order(ideal.qclass.representative) % p != 0, "prime ideal needs a p-regular class");
    std::uint64_t e_reg = g.exponent();
    while (e_reg % p == 0) e_reg /= p;
    const unsigned f = e_reg == 1 ? 1 : static_cast<unsigned>(multiplicative_order(p % e_reg, e_reg));
    FiniteField field(p, f);
    auto zeta = field.root_of_unity(e_reg);
    ensure(w.value.is_integral(), "character value is not an algebraic integer");
    auto image = field.zero();
    auto power = field.one();
    for (const auto& c : w.value.numerators()) {
        BigInt r = c % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        auto term = field.mul(power, field.from_int(static_cast<std::int64_t>(r.get_ui())));
        image = field.add(image, term);
        power = field.mul(power, zeta);
    }
    w.member = field.is_zero(image);
    w.field_characteristic = p;
    w.field_degree = f;
    w.field_modulus = field.modulus();
    w.zeta_image = zeta;
    w.value_image = image;
    return w;
}

bool ideal_membership(const PrimeIdealRQ& ideal, const VirtualCharacter& chi) {
    return ideal_membership_detail(ideal, chi).member;
}

std::vector<WedderburnComponent> wedderburn_pgroup(const FiniteGroup& g, std::uint64_t p) {
    require(is_prime(p), "Wedderburn decomposition needs a prime");
    require(p != 2, "Wedderburn decomposition is implemented for odd primes only");
    std::uint64_t n = g.order();
    while (n % p == 0) n /= p;
    require(n == 1, "group is not a p-group");
    auto t = CharacterTable::of(g);
    const std::uint32_t e = t->conductor();
    std::vector<WedderburnComponent> out;
    std::uint64_t dim = 0;
    for (const auto& orbit : galois_orbits(*t)) {
        const auto& chi = t->irreducible(orbit.front());
        unsigned s = 0;
        std::uint32_t level = 1;
        for (;;) {
            bool inside = std::all_of(chi.begin(), chi.end(), [&](const auto& v) { return lies_in_subfield(v, level); });
            if (inside) break;
            ensure(level < e, "character field exceeds Q(zeta_exp)");
            level *= static_cast<std::uint32_t>(p);
            ++s;
        }
        ensure(orbit.size() == euler_phi(level), "Galois orbit size differs from the field degree");
        dim += t->degree(orbit.front()) * t->degree(orbit.front()) * euler_phi(level);
        out.push_back({t->degree(orbit.front()), s, orbit});
    }
    ensure(dim == g.order(), "Wedderburn dimensions do not sum to the group order");
    return out;
}

std::vector<BigInt> induced_from_cyclic(const CharacterTable& t, Elem gen, std::uint64_t k) {
    const auto& g = t.group();
    const std::uint64_t o = g.element_order(gen);
    const std::uint64_t e = t.conductor();
    const std::uint64_t step = e / o;
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        CyclotomicElement s(static_cast<std::uint32_t>(e));
        Elem y = g.identity();
        for (std::uint64_t r = 0; r < o; ++r) {
            // lambda(gen^r) * conj(chi(gen^r)) = zeta^(step k r) * chi(gen^-r)
            auto v = t.irreducible(i)[g.class_of(g.inv(y))];
            if (!v.is_zero())
                s += v * CyclotomicElement::zeta_power(static_cast<std::uint32_t>(e),
                                                       static_cast<std::int64_t>(step * k % e * r % e));
            y = g.mul(y, gen);
        }
        s *= BigRational(1, static_cast<unsigned long>(o));
        ensure(s.is_rational() && s.to_rational().get_den() == 1 && s.to_rational() >= 0,
               "Frobenius reciprocity produced a non-natural multiplicity");
        out.push_back(s.to_rational().get_num());
    }
    return out;
}

ArtinExponent artin_exponent(const FiniteGroup& g) {
    auto t = CharacterTable::of(g);
    std::set<std::set<std::size_t>> seen_subgroups;
    std::set<std::vector<BigInt>> columns;
    for (const auto& c : cyclic_subgroups(g)) {
        std::set<std::size_t> key;
        for (Elem x : c.elements)
            if (g.element_order(x) == c.elements.size()) key.insert(g.class_of(x));
        if (!seen_subgroups.insert(key).second) continue;
        for (std::uint64_t k = 0; k < c.elements.size(); ++k) columns.insert(induced_from_cyclic(*t, c.generator, k));
    }
    std::vector<std::vector<BigInt>> rows(columns.begin(), columns.end());
    IntMatrix gens = IntMatrix::from_rows(rows, t->size());
    BigInt exponent = 1;
    auto divisors = elementary_divisors(gens);
    ensure(divisors.size() == t->size(), "induced characters do not have full rank");
    for (const auto& d : divisors) {
        ensure(d != 0, "induced characters do not have full rank");
        exponent = lcm(exponent, d);
    }
    RowLattice lattice(gens);
    std::vector<BigInt> trivial(t->size(), 0);
    trivial[0] = 1;
    auto index = lattice.membership_index(trivial);
    ensure(index.has_value(), "trivial character is not in the rational span of induced characters");
    return {exponent, *index, rows.size()};
}

}  // namespace adams
