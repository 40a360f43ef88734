#include <algorithm>
#include <map>

#include "adams/error.hpp"
#include "adams/gring.hpp"

namespace adams {

FiniteGroup symmetric_group(std::size_t n) {
    require(n >= 1, "symmetric group needs at least one point");
    std::vector<Permutation> gens;
    if (n >= 2) {
        Permutation swap(n), cycle(n);
        for (std::size_t i = 0; i < n; ++i) {
            swap[i] = static_cast<std::uint32_t>(i);
            cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
        }
        std::swap(swap[0], swap[1]);
        gens.push_back(swap);
        if (n >= 3) gens.push_back(cycle);
    }
    return FiniteGroup::from_permutations("S" + std::to_string(n), gens, n);
}

Permutation symmetric_group_permutation(const FiniteGroup& s, Elem a) { return s.element_permutation(a); }

namespace {

struct Block {
    std::vector<int> degrees;
    std::size_t offset;
    std::size_t size;
};

// Degree tuples of length ell with entries in [lo, hi], lexicographic.
std::vector<std::vector<int>> degree_tuples(int lo, int hi, std::size_t ell) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(ell, lo);
    for (;;) {
        out.push_back(t);
        std::size_t a = ell;
        while (a > 0 && t[a - 1] == hi) t[--a] = lo;
        if (a == 0) break;
        ++t[a - 1];
    }
    return out;
}

void with_offsets(const SparseMatrix& m, std::size_t r0, std::size_t c0,
                  std::vector<std::tuple<std::size_t, std::size_t, BigInt>>& sink) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [r, v] : m.column(j)) sink.emplace_back(r0 + r, c0 + j, v);
}

}  // namespace

BoundedComplex tensor_power_complex(const BoundedComplex& c, std::size_t ell) {
    require(ell >= 1, "tensor power needs ell >= 1");
    std::size_t total = 0;
    for (int n = c.lowest_degree(); n <= c.highest_degree(); ++n) total += c.term(n).rank();
    std::size_t dim = 1;
    for (std::size_t a = 0; a < ell; ++a) {
        if (total != 0 && dim > kMaxTensorDimension / total) throw SizeLimitError("tensor power exceeds the dimension limit");
        dim *= total;
    }
    if (dim > kMaxTensorDimension) throw SizeLimitError("tensor power exceeds the dimension limit");

    const int lo = c.lowest_degree(), hi = c.highest_degree();
    const int out_lo = static_cast<int>(ell) * lo, out_hi = static_cast<int>(ell) * hi;
    const std::size_t nout = static_cast<std::size_t>(out_hi - out_lo + 1);
    const FiniteGroup& g = c.group();
    const std::size_t ngen = g.generators().size();

    std::vector<std::vector<Block>> blocks(nout);
    std::vector<std::size_t> ranks(nout, 0);
    std::map<std::vector<int>, std::pair<std::size_t, std::size_t>> where;  // degrees -> (term, block)
    for (auto& d : degree_tuples(lo, hi, ell)) {
        int sum = 0;
        std::size_t size = 1;
        for (int x : d) {
            sum += x;
            size *= c.term(x).rank();
        }
        const std::size_t ti = static_cast<std::size_t>(sum - out_lo);
        where[d] = {ti, blocks[ti].size()};
        blocks[ti].push_back({d, ranks[ti], size});
        ranks[ti] += size;
    }

    auto factor_product = [&](const std::vector<int>& d, auto&& factor) {
        SparseMatrix m = factor(0, d[0]);
        for (std::size_t a = 1; a < ell; ++a) m = kronecker(m, factor(a, d[a]));
        return m;
    };

    std::vector<GRingLattice> terms;
    for (std::size_t ti = 0; ti < nout; ++ti) {
        std::vector<SparseMatrix> gens;
        for (std::size_t s = 0; s < ngen; ++s) {
            std::vector<std::tuple<std::size_t, std::size_t, BigInt>> trip;
            for (const auto& b : blocks[ti]) {
                auto m = factor_product(b.degrees, [&](std::size_t, int x) { return c.term(x).generator_matrices()[s]; });
                with_offsets(m, b.offset, b.offset, trip);
            }
            gens.push_back(SparseMatrix::from_triplets(ranks[ti], ranks[ti], std::move(trip)));
        }
        terms.emplace_back(g, ranks[ti], std::move(gens), c.term(lo).inverted_prime());
    }

    // d(m_1 (x) ... (x) m_ell) = sum_a (-1)^(d_1 + ... + d_(a-1)) m_1 (x) ... (x) d m_a (x) ... (x) m_ell
    std::vector<SparseMatrix> diffs;
    for (std::size_t ti = 0; ti + 1 < nout; ++ti) {
        std::vector<std::tuple<std::size_t, std::size_t, BigInt>> trip;
        for (const auto& b : blocks[ti]) {
            int prefix = 0;
            for (std::size_t a = 0; a < ell; ++a) {
                const int da = b.degrees[a];
                if (da < hi) {
                    auto target = b.degrees;
                    ++target[a];
                    const auto& [tj, bj] = where.at(target);
                    auto m = factor_product(b.degrees, [&](std::size_t f, int x) {
                        if (f == a) return c.differential(x);
                        return SparseMatrix::identity(c.term(x).rank());
                    });
                    if (prefix % 2 != 0) m = m.scaled(BigInt(-1));
                    with_offsets(m, blocks[tj][bj].offset, b.offset, trip);
                }
                prefix += da;
            }
        }
        diffs.push_back(SparseMatrix::from_triplets(ranks[ti + 1], ranks[ti], std::move(trip)));
    }

    // (pi t)_{pi(a)} = t_a with sign prod_{a<b, pi(a)>pi(b)} (-1)^(d_a d_b)
    FiniteGroup sym = symmetric_group(ell);
    std::vector<std::vector<SparseMatrix>> aux(nout);
    for (std::size_t ti = 0; ti < nout; ++ti) {
        for (Elem e = 0; e < sym.order(); ++e) {
            const auto& pi = sym.element_permutation(e);
            std::vector<std::tuple<std::size_t, std::size_t, BigInt>> trip;
            for (const auto& b : blocks[ti]) {
                std::vector<int> target(ell);
                for (std::size_t a = 0; a < ell; ++a) target[pi[a]] = b.degrees[a];
                int sgn = 1;
                for (std::size_t a = 0; a < ell; ++a)
                    for (std::size_t q = a + 1; q < ell; ++q)
                        if (pi[a] > pi[q] && (b.degrees[a] * b.degrees[q]) % 2 != 0) sgn = -sgn;
                const auto& tb = blocks[ti][where.at(target).second];
                std::vector<std::size_t> src_rank(ell), dst_rank(ell);
                for (std::size_t a = 0; a < ell; ++a) src_rank[a] = c.term(b.degrees[a]).rank();
                for (std::size_t a = 0; a < ell; ++a) dst_rank[a] = c.term(target[a]).rank();
                std::vector<std::size_t> idx(ell, 0), out(ell);
                for (std::size_t k = 0; k < b.size; ++k) {
                    for (std::size_t a = 0; a < ell; ++a) out[pi[a]] = idx[a];
                    std::size_t pos = 0;
                    for (std::size_t a = 0; a < ell; ++a) pos = pos * dst_rank[a] + out[a];
                    trip.emplace_back(tb.offset + pos, b.offset + k, BigInt(sgn));
                    for (std::size_t a = ell; a-- > 0;) {
                        if (++idx[a] < src_rank[a]) break;
                        idx[a] = 0;
                    }
                }
            }
            aux[ti].push_back(SparseMatrix::from_triplets(ranks[ti], ranks[ti], std::move(trip)));
        }
    }
    return BoundedComplex(out_lo, std::move(terms), std::move(diffs), std::move(sym), std::move(aux));
}

}  // namespace adams
