#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "adams/groups.hpp"
#include "adams/matrix.hpp"

#include "json.hpp"

namespace adams {

// Finite abelian p-group Z^n / (row span of rels) with an automorphism given
// by action (column j = image of generator j) for the generator u of (Z/p)^*.
class EigenModule {
public:
    EigenModule(std::uint64_t p, IntMatrix rels, IntMatrix action, std::optional<std::uint64_t> u = std::nullopt);
    static EigenModule from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    std::uint64_t prime() const { return p_; }
    std::uint64_t generator() const { return u_; }
    const IntMatrix& relations() const { return rels_; }
    const IntMatrix& action() const { return action_; }
    std::size_t rank() const { return action_.rows(); }
    BigInt order() const { return order_; }
    // p^k annihilating M.
    BigInt exponent() const { return exponent_; }

    // Columns of v lie in the relation lattice.
    bool columns_vanish(const IntMatrix& v) const;
    // Order of the subgroup generated by the columns of s.
    BigInt subgroup_order(const IntMatrix& s) const;
    // Abelian invariants (non-unit elementary divisors) of that subgroup.
    std::vector<BigInt> subgroup_invariants(const IntMatrix& s) const;

private:
    std::uint64_t p_;
    std::uint64_t u_;
    IntMatrix rels_;
    IntMatrix action_;
    BigInt order_;
    BigInt exponent_;
};

// Teichmueller lift of a mod p^k.
BigInt teichmuller(std::uint64_t a, std::uint64_t p, const BigInt& modulus);

struct EigenComponent {
    IntMatrix idempotent;    // e_i reduced mod the exponent
    IntMatrix generators;    // columns spanning M^(i)
    BigInt order;
    std::vector<BigInt> invariants;
};

struct EigenDecomposition {
    std::map<std::uint64_t, EigenComponent> components;  // i in [0, p - 2]
};

EigenDecomposition eigen_decompose(const EigenModule& m);

// Indices i whose eigenspace is not killed by prod_j (psi^ell - ell^-j), j in [0, d] or [1, d].
std::set<std::uint64_t> adams_eigen_filter(std::uint64_t p, std::uint64_t d, std::uint64_t ell, bool drop_j0);
// (ell - 1)^(d + 1), the multiplier carried by the annihilating operator.
BigInt annihilator_multiplier(std::uint64_t ell, std::uint64_t d);

struct AnnihilationBound {
    std::uint64_t a;
    std::uint64_t b;
    BigInt bound;
    std::string sylow2_tag;
    std::string sylow3_tag;
};

AnnihilationBound annihilation_bound(const FiniteGroup& g);

}  // namespace adams
