#pragma once

#include <optional>
#include <vector>

#include "adams/matrix.hpp"

namespace adams {

struct SmithForm {
    IntMatrix U;  // unimodular, rows x rows
    IntMatrix D;  // diagonal, d1 | d2 | ..., all >= 0
    IntMatrix V;  // unimodular, cols x cols
};

// U * m * V = D.
SmithForm smith_normal_form(const IntMatrix& m);
// Diagonal of the Smith form (min(rows, cols) entries), without transforms.
std::vector<BigInt> elementary_divisors(const IntMatrix& m);

struct HermiteForm {
    IntMatrix H;  // row echelon, same shape as input
    IntMatrix U;  // unimodular with U * m = H
    std::size_t rank = 0;
};

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot), zero rows at the bottom.
IntMatrix hermite_normal_form(const IntMatrix& m);
HermiteForm hermite_with_transform(const IntMatrix& m);

// Columns form a Z-basis of { x : m x = 0 }; the result is saturated.
IntMatrix integer_kernel(const IntMatrix& m);

// For a matrix whose columns form a saturated basis of a sublattice of Z^n,
// an integer matrix L with L * basis = I.
IntMatrix left_inverse_of_saturated(const IntMatrix& basis);

// Lattice spanned by the rows of m; membership and coordinate queries.
class RowLattice {
public:
    explicit RowLattice(const IntMatrix& generators);
    std::size_t rank() const { return basis_.rows(); }
    std::size_t ambient() const { return ambient_; }
    const IntMatrix& basis() const { return basis_; }  // HNF rows, nonzero only
    bool contains(std::span<const BigInt> v) const;
    // Coordinates of v in the HNF basis, or nullopt when v is not in the lattice.
    std::optional<std::vector<BigInt>> coordinates(std::span<const BigInt> v) const;
    // Least a >= 1 with a*v in the lattice; nullopt if v is not in the Q-span.
    std::optional<BigInt> membership_index(std::span<const BigInt> v) const;

private:
    std::size_t ambient_;
    IntMatrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace adams
