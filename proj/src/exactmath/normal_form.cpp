#include "adams/normal_form.hpp"

#include <algorithm>

#include "adams/error.hpp"

namespace adams {
namespace {

void row_axpy(IntMatrix& m, std::size_t dst, const BigInt& q, std::size_t src) {
    // row_dst -= q * row_src
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m(src, j) != 0) m(dst, j) -= q * m(src, j);
}

void col_axpy(IntMatrix& m, std::size_t dst, const BigInt& q, std::size_t src) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, src) != 0) m(i, dst) -= q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

// Replaces (row a, row b) by (s*a + t*b, -(y/g)*a + (x/g)*b) where x, y are
// the entries in column c; afterwards row b has a zero in column c.
void gcd_combine_rows(IntMatrix& m, std::size_t a, std::size_t b, std::size_t c, IntMatrix* u) {
    BigInt x = m(a, c), y = m(b, c), g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    BigInt xg = x / g, yg = y / g;
    auto apply = [&](IntMatrix& mat) {
        for (std::size_t j = 0; j < mat.cols(); ++j) {
            BigInt ra = mat(a, j), rb = mat(b, j);
            if (ra == 0 && rb == 0) continue;
            mat(a, j) = s * ra + t * rb;
            mat(b, j) = xg * rb - yg * ra;
        }
    };
    apply(m);
    if (u) apply(*u);
}

template <bool WithTransforms>
void smith_in_place(IntMatrix& a, IntMatrix& u, IntMatrix& v) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            // pivot: smallest nonzero |entry| in the trailing block
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pi == rows || abs(a(i, j)) < abs(a(pi, pj))) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == rows) return;
            a.swap_rows(t, pi);
            a.swap_cols(t, pj);
            if constexpr (WithTransforms) {
                u.swap_rows(t, pi);
                v.swap_cols(t, pj);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q = a(i, t) / a(t, t);
                row_axpy(a, i, q, t);
                if constexpr (WithTransforms) row_axpy(u, i, q, t);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q = a(t, j) / a(t, t);
                col_axpy(a, j, q, t);
                if constexpr (WithTransforms) col_axpy(v, j, q, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility d_t | every trailing entry
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        row_axpy(a, t, BigInt(-1), i);
                        if constexpr (WithTransforms) row_axpy(u, t, BigInt(-1), i);
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            negate_row(a, t);
            if constexpr (WithTransforms) negate_row(u, t);
        }
    }
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    smith_in_place<true>(f.D, f.U, f.V);
    return f;
}

std::vector<BigInt> elementary_divisors(const IntMatrix& m) {
    IntMatrix a = m, dummy;
    smith_in_place<false>(a, dummy, dummy);
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) d.push_back(a(i, i));
    return d;
}

HermiteForm hermite_with_transform(const IntMatrix& m) {
    HermiteForm f{m, IntMatrix::identity(m.rows()), 0};
    IntMatrix& a = f.H;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) != 0) gcd_combine_rows(a, r, i, c, &f.U);
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) {
            negate_row(a, r);
            negate_row(f.U, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (a(i, c) == 0) continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            row_axpy(a, i, q, r);
            row_axpy(f.U, i, q, r);
        }
        ++r;
    }
    f.rank = r;
    return f;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    // Same elimination without tracking the transform.
    IntMatrix a = m;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (a(i, c) != 0) gcd_combine_rows(a, r, i, c, nullptr);
        }
        if (a(r, c) == 0) continue;
        if (a(r, c) < 0) negate_row(a, r);
        for (std::size_t i = 0; i < r; ++i) {
            if (a(i, c) == 0) continue;
            BigInt q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
            row_axpy(a, i, q, r);
        }
        ++r;
    }
    return a;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    const std::size_t n = m.cols();
    HermiteForm f = hermite_with_transform(m.transpose());
    std::size_t k = n - f.rank;
    IntMatrix rows(k, n);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j) rows(i, j) = f.U(f.rank + i, j);
    if (k == 0) return IntMatrix(n, 0);
    return hermite_normal_form(rows).transpose();
}

IntMatrix left_inverse_of_saturated(const IntMatrix& basis) {
    const std::size_t k = basis.cols();
    HermiteForm f = hermite_with_transform(basis);
    require(f.rank == k, "basis columns are linearly dependent");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            require(f.H(i, j) == (i == j ? 1 : 0), "sublattice is not saturated");
    return f.U.block(0, 0, k, basis.rows());
}

RowLattice::RowLattice(const IntMatrix& generators) : ambient_(generators.cols()) {
    IntMatrix h = hermite_normal_form(generators);
    std::size_t r = 0;
    while (r < h.rows()) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(r, j) != 0) {
                pivots_.push_back(j);
                zero = false;
                break;
            }
        if (zero) break;
        ++r;
    }
    basis_ = h.block(0, 0, r, h.cols());
}

std::optional<std::vector<BigInt>> RowLattice::coordinates(std::span<const BigInt> v) const {
    require(v.size() == ambient_, "vector length does not match lattice ambient dimension");
    std::vector<BigInt> rest(v.begin(), v.end());
    std::vector<BigInt> coords(basis_.rows());
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        const BigInt& piv = basis_(i, pivots_[i]);
        if (rest[pivots_[i]] % piv != 0) return std::nullopt;
        coords[i] = rest[pivots_[i]] / piv;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_(i, j) != 0) rest[j] -= coords[i] * basis_(i, j);
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

bool RowLattice::contains(std::span<const BigInt> v) const { return coordinates(v).has_value(); }

std::optional<BigInt> RowLattice::membership_index(std::span<const BigInt> v) const {
    require(v.size() == ambient_, "vector length does not match lattice ambient dimension");
    std::vector<BigRational> rest(v.begin(), v.end());
    BigInt index = 1;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        BigRational c = rest[pivots_[i]] / BigRational(basis_(i, pivots_[i]));
        c.canonicalize();
        mpz_lcm(index.get_mpz_t(), index.get_mpz_t(), c.get_den_mpz_t());
        for (std::size_t j = 0; j < ambient_; ++j)
            if (basis_(i, j) != 0) rest[j] -= c * BigRational(basis_(i, j));
    }
    for (const auto& x : rest)
        if (x != 0) return std::nullopt;
    return index;
}

}  // namespace adams
