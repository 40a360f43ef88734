#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adams/chartheory.hpp"
#include "adams/groups.hpp"
#include "adams/matrix.hpp"

#include "json.hpp"

namespace adams {

// Integer matrices for every group element (left action on column vectors).
// Constructed from generator matrices; the homomorphism property is checked on
// the whole group.
class GRingLattice {
public:
    GRingLattice(FiniteGroup g, std::size_t rank, std::vector<SparseMatrix> generator_matrices,
                 std::optional<std::uint64_t> inverted_prime = std::nullopt);

    static GRingLattice trivial(const FiniteGroup& g, std::size_t rank = 1);
    static GRingLattice regular(const FiniteGroup& g);
    // Linear character with values +-1, given by its irreducible index.
    static GRingLattice sign(const FiniteGroup& g);
    static GRingLattice from_linear_character(const FiniteGroup& g, std::size_t irreducible);
    // Natural permutation module of a permutation group and its augmentation kernel.
    static GRingLattice permutation(const FiniteGroup& g);
    static GRingLattice augmentation(const FiniteGroup& g);
    static GRingLattice direct_sum(const GRingLattice& a, const GRingLattice& b);
    static GRingLattice from_json(const nlohmann::json& j);
    // "trivial", "sign", "regular", "perm", "aug" on a corpus group.
    static GRingLattice corpus(const std::string& group, const std::string& kind);
    // (group, kind) pairs of the standard lattice corpus over C2, C3, C4, S3.
    static std::vector<std::pair<std::string, std::string>> corpus_names();

    const FiniteGroup& group() const { return group_; }
    std::size_t rank() const { return rank_; }
    std::optional<std::uint64_t> inverted_prime() const { return inverted_prime_; }
    GRingLattice with_inverted_prime(std::optional<std::uint64_t> ell) const;
    const std::vector<SparseMatrix>& generator_matrices() const { return generators_; }
    const SparseMatrix& matrix(Elem g) const { return elements_[g]; }

    // Traces on conjugacy classes.
    std::vector<BigInt> traces() const;
    VirtualCharacter character() const;

    // Sublattice spanned by the columns of basis (saturated, G-stable).
    GRingLattice restrict_to(const IntMatrix& basis) const;

    nlohmann::json to_json() const;

private:
    FiniteGroup group_;
    std::size_t rank_;
    std::vector<SparseMatrix> generators_;
    std::vector<SparseMatrix> elements_;
    std::optional<std::uint64_t> inverted_prime_;
};

// A G-lattice with a commuting action of an auxiliary group.
class AugmentedLattice {
public:
    AugmentedLattice(GRingLattice base, FiniteGroup aux, std::vector<SparseMatrix> aux_generator_matrices);

    // Trivial auxiliary action by C_ell.
    static AugmentedLattice inflate(const GRingLattice& m, std::uint64_t ell);
    // Z[C_ell] (x) M with C_ell acting on the left factor.
    static AugmentedLattice free_cyclic(const GRingLattice& m, std::uint64_t ell);
    // S (x) M with the generator acting by multiplication by z^a.
    static AugmentedLattice cyclotomic_twist(const GRingLattice& m, std::uint64_t ell, std::uint64_t a);

    const GRingLattice& base() const { return base_; }
    const FiniteGroup& aux() const { return aux_; }
    const SparseMatrix& aux_matrix(Elem a) const { return aux_elements_[a]; }

private:
    GRingLattice base_;
    FiniteGroup aux_;
    std::vector<SparseMatrix> aux_elements_;
};

// Complex M^lo -> ... -> M^hi; differential(i) maps term(i) to term(i+1).
class BoundedComplex {
public:
    BoundedComplex(int lowest_degree, std::vector<GRingLattice> terms, std::vector<SparseMatrix> differentials);
    BoundedComplex(int lowest_degree, std::vector<GRingLattice> terms, std::vector<SparseMatrix> differentials,
                   FiniteGroup aux, std::vector<std::vector<SparseMatrix>> aux_elements);

    int lowest_degree() const { return lowest_; }
    int highest_degree() const { return lowest_ + static_cast<int>(terms_.size()) - 1; }
    std::size_t length() const { return terms_.size(); }
    const GRingLattice& term(int degree) const;
    const SparseMatrix& differential(int degree) const;
    const FiniteGroup& group() const { return terms_.front().group(); }
    bool has_aux() const { return aux_.has_value(); }
    const FiniteGroup& aux() const { return *aux_; }
    // Auxiliary matrix of element a on the term of the given degree.
    const SparseMatrix& aux_matrix(int degree, Elem a) const;

    // Restricts the auxiliary action to the cyclic subgroup generated by c.
    BoundedComplex restrict_aux_to_cyclic(Elem c) const;

private:
    void verify() const;

    int lowest_;
    std::vector<GRingLattice> terms_;
    std::vector<SparseMatrix> differentials_;
    std::optional<FiniteGroup> aux_;
    std::vector<std::vector<SparseMatrix>> aux_elements_;
};

inline constexpr std::size_t kMaxTensorDimension = 1000000;
inline constexpr std::size_t kMaxCyclicPowerDimension = 100000;

FiniteGroup symmetric_group(std::size_t n);
// Element of symmetric_group(n) as an image list.
Permutation symmetric_group_permutation(const FiniteGroup& s, Elem a);

BoundedComplex tensor_power_complex(const BoundedComplex& c, std::size_t ell);

// Virtual character of aux x G in the basis lambda_j (x) psi_i (rows j, columns i).
struct ProductCharacter {
    std::shared_ptr<const CharacterTable> aux;
    std::shared_ptr<const CharacterTable> group;
    IntMatrix coeffs;

    BigInt rank() const;
    ProductCharacter operator-(const ProductCharacter& o) const;
    ProductCharacter operator+(const ProductCharacter& o) const;
    bool operator==(const ProductCharacter& o) const { return coeffs == o.coeffs; }
    // G-character of the isotypic part belonging to aux irreducible j.
    VirtualCharacter component(std::size_t j) const;
};

ProductCharacter product_character(const std::shared_ptr<const CharacterTable>& aux,
                                   const std::shared_ptr<const CharacterTable>& group,
                                   const std::vector<std::vector<BigInt>>& traces);
ProductCharacter euler_character(const BoundedComplex& c);
ProductCharacter lattice_product_character(const AugmentedLattice& n);
// Inflation of a G-character along aux (trivial aux action).
ProductCharacter inflate_character(const std::shared_ptr<const CharacterTable>& aux, const VirtualCharacter& chi);
// x lies in (v) = [regular aux] * R(G) iff its coefficients do not depend on j.
bool in_free_ideal(const ProductCharacter& x);

struct TraceIdentity {
    CyclotomicElement lhs;
    CyclotomicElement rhs;
};
TraceIdentity cyclic_trace_identity(const GRingLattice& p, std::uint64_t ell, Elem g);

GRingLattice fa_construct(const GRingLattice& p, std::uint64_t ell, std::uint64_t a);
VirtualCharacter psi_cyclic_character(const GRingLattice& p, std::uint64_t ell);

VirtualCharacter zeta_map(const AugmentedLattice& n);
GRingLattice cyclic_invariants(const AugmentedLattice& n);

// Z[1/ell]-basis of the lattice as a free Z[G]-module built from vectors with
// entries in {-1, 0, 1}; nullopt if none exists within the search bound.
inline constexpr std::size_t kMaxFreenessSearchRank = 16;
std::optional<std::vector<std::vector<BigInt>>> find_free_basis(const GRingLattice& m);

}  // namespace adams
