#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adams/cyclotomic.hpp"
#include "adams/groups.hpp"

namespace adams {

inline constexpr std::size_t kMaxCharacterTableOrder = 2000;

// Values on conjugacy classes, in class order, all in Q(zeta_e) with e = exp(G).
using ClassFunction = std::vector<CyclotomicElement>;

class CharacterTable {
public:
    // Cached per group content hash.
    static std::shared_ptr<const CharacterTable> of(const FiniteGroup& g);
    static std::shared_ptr<const CharacterTable> compute(const FiniteGroup& g);

    const FiniteGroup& group() const { return group_; }
    std::uint32_t conductor() const { return conductor_; }
    std::size_t size() const { return irreducibles_.size(); }
    const ClassFunction& irreducible(std::size_t i) const { return irreducibles_[i]; }
    const std::vector<ClassFunction>& irreducibles() const { return irreducibles_; }
    std::uint64_t degree(std::size_t i) const { return degrees_[i]; }
    std::size_t class_size(std::size_t c) const;
    // Modulus used by the modular construction.
    std::uint64_t dixon_prime() const { return dixon_prime_; }

    // (1/|G|) sum_c |c| a(c) conj(b(c))
    CyclotomicElement inner_product(const ClassFunction& a, const ClassFunction& b) const;
    // Integer coordinates in the irreducible basis; InternalError if not integral.
    std::vector<BigInt> decompose(const ClassFunction& f) const;
    // Index of the irreducible equal to f, if any.
    std::optional<std::size_t> find(const ClassFunction& f) const;
    ClassFunction zero_function() const;

private:
    explicit CharacterTable(const FiniteGroup& g) : group_(g) {}
    FiniteGroup group_;
    std::uint32_t conductor_ = 1;
    std::uint64_t dixon_prime_ = 0;
    std::vector<ClassFunction> irreducibles_;
    std::vector<std::uint64_t> degrees_;
};

class VirtualCharacter {
public:
    VirtualCharacter(std::shared_ptr<const CharacterTable> table, std::vector<BigInt> coeffs);
    static VirtualCharacter zero(std::shared_ptr<const CharacterTable> table);
    static VirtualCharacter irreducible(std::shared_ptr<const CharacterTable> table, std::size_t i);
    static VirtualCharacter trivial(std::shared_ptr<const CharacterTable> table);
    static VirtualCharacter regular(std::shared_ptr<const CharacterTable> table);
    static VirtualCharacter from_values(std::shared_ptr<const CharacterTable> table, const ClassFunction& f);

    const std::shared_ptr<const CharacterTable>& table() const { return table_; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    ClassFunction values() const;
    CyclotomicElement value(std::size_t cls) const;
    BigInt rank() const;

    VirtualCharacter operator+(const VirtualCharacter& o) const;
    VirtualCharacter operator-(const VirtualCharacter& o) const;
    VirtualCharacter operator*(const VirtualCharacter& o) const;
    VirtualCharacter scaled(const BigInt& s) const;
    bool operator==(const VirtualCharacter& o) const { return coeffs_ == o.coeffs_; }

private:
    std::shared_ptr<const CharacterTable> table_;
    std::vector<BigInt> coeffs_;
};

// psi^n(chi)(g) = chi(g^n)
ClassFunction adams_values(const CharacterTable& t, std::int64_t n, const ClassFunction& f);
VirtualCharacter adams_character(std::int64_t n, const VirtualCharacter& chi);
bool adams_compose_check(std::int64_t a, std::int64_t b, const VirtualCharacter& chi);

// Orbits of (Z/e)^* on the irreducibles, each sorted, listed by least member.
std::vector<std::vector<std::size_t>> galois_orbits(const CharacterTable& t);
// Orbit sums; the rational irreducibles up to Schur index.
std::vector<VirtualCharacter> rational_orbit_sums(const std::shared_ptr<const CharacterTable>& t);

struct PrimeIdealRQ {
    QClass qclass;
    std::uint64_t residue_char;
};
std::vector<PrimeIdealRQ> prime_spectrum(const FiniteGroup& g, std::uint64_t p);

struct MembershipWitness {
    bool member;
    CyclotomicElement value;
    // Residue field data for residue_char > 0.
    std::uint64_t field_characteristic = 0;
    unsigned field_degree = 0;
    std::vector<std::uint64_t> field_modulus;
    std::vector<std::uint64_t> zeta_image;
    std::vector<std::uint64_t> value_image;
};
MembershipWitness ideal_membership_detail(const PrimeIdealRQ& ideal, const VirtualCharacter& chi);
bool ideal_membership(const PrimeIdealRQ& ideal, const VirtualCharacter& chi);

struct WedderburnComponent {
    std::uint64_t matrix_size;
    unsigned cyclotomic_level;
    std::vector<std::size_t> characters;
};
std::vector<WedderburnComponent> wedderburn_pgroup(const FiniteGroup& g, std::uint64_t p);

struct ArtinExponent {
    BigInt cokernel_exponent;
    BigInt trivial_char_index;
    std::size_t induced_columns;
};
ArtinExponent artin_exponent(const FiniteGroup& g);
// Irreducible-basis coordinates of Ind_<gen>^G(lambda_k), lambda_k(gen) = zeta_o^k.
std::vector<BigInt> induced_from_cyclic(const CharacterTable& t, Elem gen, std::uint64_t k);

}  // namespace adams
