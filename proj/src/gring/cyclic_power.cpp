#include <algorithm>
#include <map>
#include <unordered_map>

#include "adams/error.hpp"
#include "adams/gring.hpp"
#include "adams/normal_form.hpp"

namespace adams {

namespace {

void check_cyclic_power_input(const GRingLattice& p, std::uint64_t ell) {
    require(is_prime(ell), "cyclic power needs a prime ell");
    require(p.group().order() % ell != 0, "ell must not divide the group order");
    std::size_t dim = 1;
    for (std::uint64_t a = 0; a < ell; ++a) {
        if (p.rank() != 0 && dim > kMaxCyclicPowerDimension / p.rank())
            throw SizeLimitError("tensor power exceeds the cyclic power dimension limit");
        dim *= p.rank();
    }
}

// Tuples in [0, r)^ell, position 0 most significant (Kronecker order).
struct TupleCodec {
    std::size_t r, ell;
    std::vector<std::size_t> decode(std::size_t x) const {
        std::vector<std::size_t> t(ell);
        for (std::size_t a = ell; a-- > 0;) {
            t[a] = x % r;
            x /= r;
        }
        return t;
    }
    std::size_t encode(const std::vector<std::size_t>& t) const {
        std::size_t x = 0;
        for (auto v : t) x = x * r + v;
        return x;
    }
    // (pi t)_{pi(a)} = t_a
    std::size_t move(std::size_t x, const std::vector<std::size_t>& pi) const {
        auto t = decode(x);
        std::vector<std::size_t> u(ell);
        for (std::size_t a = 0; a < ell; ++a) u[pi[a]] = t[a];
        return encode(u);
    }
};

struct Shape {
    IntMatrix kernel;  // columns: basis of the orbit piece, index j*m + i
    IntMatrix left;    // left * kernel = I
};

// Multiplication by z^a on S = Z[z]/(1 + ... + z^(ell-1)), basis z^0..z^(ell-2).
IntMatrix z_power(std::uint64_t ell, std::uint64_t a) {
    const std::size_t d = ell - 1;
    IntMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::size_t k = (j + a) % ell;
        if (k < d) {
            m(k, j) = 1;
        } else {
            for (std::size_t i = 0; i < d; ++i) m(i, j) = -1;
        }
    }
    return m;
}

// Ring automorphism z -> z^b of S.
IntMatrix z_substitution(std::uint64_t ell, std::uint64_t b) {
    const std::size_t d = ell - 1;
    IntMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const std::size_t k = (j * b) % ell;
        if (k < d) {
            m(k, j) = 1;
        } else {
            for (std::size_t i = 0; i < d; ++i) m(i, j) = -1;
        }
    }
    return m;
}

IntMatrix perm_matrix(const std::vector<std::size_t>& p) {
    IntMatrix m(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(p[i], i) = 1;
    return m;
}

IntMatrix dense_kronecker(const IntMatrix& a, const IntMatrix& b) {
    return kronecker(SparseMatrix::from_dense(a), SparseMatrix::from_dense(b)).to_dense();
}

}  // namespace

GRingLattice fa_construct(const GRingLattice& p, std::uint64_t ell, std::uint64_t a) {
    check_cyclic_power_input(p, ell);
    require(p.inverted_prime() == ell, "cyclic power needs a lattice over Z[1/ell]");
    a %= ell;
    const std::size_t r = p.rank();
    const std::size_t d = ell - 1;
    const FiniteGroup& g = p.group();
    if (r == 0) return GRingLattice(g, 0, std::vector<SparseMatrix>(g.generators().size(), SparseMatrix(0, 0)), ell);

    TupleCodec codec{r, ell};
    std::size_t n = 1;
    for (std::uint64_t i = 0; i < ell; ++i) n *= r;

    std::vector<std::size_t> sigma(ell), delta(ell);
    const std::uint64_t b = ell == 2 ? 1 : primitive_root(ell);
    for (std::size_t x = 0; x < ell; ++x) {
        sigma[x] = (x + 1) % ell;
        delta[x] = (x * b) % ell;
    }

    // Orbits of <sigma, delta> on tuples, each in BFS order from its least tuple.
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> orbit_of(n, kNone), pos(n, 0);
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<const Shape*> orbit_shape;
    std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, Shape> shapes;
    const IntMatrix za = z_power(ell, a);
    const IntMatrix db = z_substitution(ell, b);
    const IntMatrix id_s = IntMatrix::identity(d);
    for (std::size_t start = 0; start < n; ++start) {
        if (orbit_of[start] != kNone) continue;
        std::vector<std::size_t> members{start};
        orbit_of[start] = orbits.size();
        for (std::size_t h = 0; h < members.size(); ++h) {
            for (const auto* gen : {&sigma, &delta}) {
                std::size_t y = codec.move(members[h], *gen);
                if (orbit_of[y] == kNone) {
                    orbit_of[y] = orbits.size();
                    pos[y] = members.size();
                    members.push_back(y);
                }
            }
        }
        const std::size_t m = members.size();
        std::vector<std::size_t> sp(m), dp(m);
        for (std::size_t i = 0; i < m; ++i) {
            sp[i] = pos[codec.move(members[i], sigma)];
            dp[i] = pos[codec.move(members[i], delta)];
        }
        auto key = std::make_pair(sp, dp);
        auto it = shapes.find(key);
        if (it == shapes.end()) {
            const IntMatrix id_m = IntMatrix::identity(m);
            IntMatrix eigen = dense_kronecker(id_s, perm_matrix(sp)) - dense_kronecker(za, id_m);
            IntMatrix invariant = dense_kronecker(db, perm_matrix(dp)) - IntMatrix::identity(d * m);
            Shape s;
            s.kernel = integer_kernel(IntMatrix::vstack(eigen, invariant));
            s.left = s.kernel.cols() == 0 ? IntMatrix(0, d * m) : left_inverse_of_saturated(s.kernel);
            it = shapes.emplace(std::move(key), std::move(s)).first;
        }
        orbit_shape.push_back(&it->second);
        orbits.push_back(std::move(members));
    }

    std::vector<std::size_t> offset(orbits.size() + 1, 0);
    for (std::size_t o = 0; o < orbits.size(); ++o) offset[o + 1] = offset[o] + orbit_shape[o]->kernel.cols();
    const std::size_t rank = offset.back();

    std::vector<SparseMatrix> gens;
    for (const auto& gm : p.generator_matrices()) {
        std::vector<std::tuple<std::size_t, std::size_t, BigInt>> trip;
        // images of basis tensors under g (x) ... (x) g, memoized per source tuple
        std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, BigInt>>> image_cache;
        auto tensor_image = [&](std::size_t x) -> const std::vector<std::pair<std::size_t, BigInt>>& {
            auto found = image_cache.find(x);
            if (found != image_cache.end()) return found->second;
            auto t = codec.decode(x);
            std::vector<std::pair<std::size_t, BigInt>> acc{{0, BigInt(1)}};
            for (std::size_t q = 0; q < ell; ++q) {
                std::vector<std::pair<std::size_t, BigInt>> next;
                for (const auto& [idx, v] : acc)
                    for (const auto& [row, w] : gm.column(t[q])) next.emplace_back(idx * r + row, v * w);
                acc = std::move(next);
            }
            return image_cache.emplace(x, std::move(acc)).first->second;
        };
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            const auto& members = orbits[o];
            const std::size_t m = members.size();
            const Shape& sh = *orbit_shape[o];
            for (std::size_t k = 0; k < sh.kernel.cols(); ++k) {
                std::map<std::size_t, std::vector<BigInt>> touched;  // orbit -> local vector
                for (std::size_t j = 0; j < d; ++j) {
                    for (std::size_t i = 0; i < m; ++i) {
                        const BigInt& coef = sh.kernel(j * m + i, k);
                        if (coef == 0) continue;
                        for (const auto& [y, w] : tensor_image(members[i])) {
                            const std::size_t oy = orbit_of[y];
                            auto& vec = touched[oy];
                            if (vec.empty()) vec.assign(d * orbits[oy].size(), BigInt(0));
                            vec[j * orbits[oy].size() + pos[y]] += coef * w;
                        }
                    }
                }
                for (auto& [oy, vec] : touched) {
                    const Shape& ty = *orbit_shape[oy];
                    auto coords = ty.left.apply(vec);
                    ensure(ty.kernel.apply(coords) == vec, "group action leaves the cyclic power lattice");
                    for (std::size_t c = 0; c < coords.size(); ++c)
                        if (coords[c] != 0) trip.emplace_back(offset[oy] + c, offset[o] + k, coords[c]);
                }
            }
        }
        gens.push_back(SparseMatrix::from_triplets(rank, rank, std::move(trip)));
    }
    return GRingLattice(g, rank, std::move(gens), ell);
}

VirtualCharacter psi_cyclic_character(const GRingLattice& p, std::uint64_t ell) {
    return fa_construct(p, ell, 0).character() - fa_construct(p, ell, 1).character();
}

TraceIdentity cyclic_trace_identity(const GRingLattice& p, std::uint64_t ell, Elem g) {
    check_cyclic_power_input(p, ell);
    const auto& grp = p.group();
    const SparseMatrix& m = p.matrix(g);
    // trace of sigma o g^(x ell) = sum over tuples of prod_a m[t_(a+1), t_a], indices mod ell
    BigInt lhs = 0;
    std::vector<std::size_t> walk(ell);
    auto extend = [&](auto&& self, std::size_t depth, const BigInt& acc) -> void {
        const std::size_t prev = walk[depth - 1];
        if (depth == ell) {
            BigInt close = m.at(walk[0], prev);
            if (close != 0) lhs += acc * close;
            return;
        }
        for (const auto& [row, v] : m.column(prev)) {
            walk[depth] = row;
            self(self, depth + 1, acc * v);
        }
    };
    for (std::size_t s = 0; s < p.rank(); ++s) {
        walk[0] = s;
        extend(extend, 1, BigInt(1));
    }
    auto table = CharacterTable::of(grp);
    auto chi = p.character();
    Elem gl = grp.pow(g, static_cast<std::int64_t>(ell));
    return {CyclotomicElement(table->conductor(), BigRational(lhs)), chi.value(grp.class_of(gl))};
}

std::optional<std::vector<std::vector<BigInt>>> find_free_basis(const GRingLattice& m) {
    const auto& g = m.group();
    const std::size_t n = m.rank();
    const std::size_t order = g.order();
    require(n <= kMaxFreenessSearchRank, "freeness search is limited to small lattices");
    if (n % order != 0) return std::nullopt;
    const std::size_t k = n / order;
    if (k == 0) return std::vector<std::vector<BigInt>>{};

    auto is_unit = [&](BigInt det) {
        if (det < 0) det = -det;
        if (det == 0) return false;
        if (auto ell = m.inverted_prime()) {
            const unsigned long q = static_cast<unsigned long>(*ell);
            while (det % q == 0) det /= q;
        }
        return det == 1;
    };

    constexpr std::size_t kBudget = 200000;
    // candidates in {-1,0,1}^n with leading nonzero entry +1, by support size
    std::vector<std::vector<BigInt>> candidates;
    for (std::size_t support = 1; support <= n && candidates.size() < kBudget; ++support) {
        std::vector<std::size_t> where(support);
        for (std::size_t i = 0; i < support; ++i) where[i] = i;
        for (;;) {
            for (std::size_t signs = 0; signs < (std::size_t{1} << (support - 1)) && candidates.size() < kBudget; ++signs) {
                std::vector<BigInt> c(n, 0);
                c[where[0]] = 1;
                for (std::size_t i = 1; i < support; ++i) c[where[i]] = ((signs >> (i - 1)) & 1) ? -1 : 1;
                candidates.push_back(std::move(c));
            }
            std::size_t i = support;
            while (i > 0 && where[i - 1] == n - support + i - 1) --i;
            if (i == 0 || candidates.size() >= kBudget) break;
            ++where[i - 1];
            for (std::size_t q = i; q < support; ++q) where[q] = where[q - 1] + 1;
        }
    }

    std::size_t tried = 0;
    std::vector<std::size_t> choice;
    auto orbit_columns = [&](const std::vector<BigInt>& c) {
        std::vector<std::vector<BigInt>> cols;
        for (Elem x = 0; x < order; ++x) cols.push_back(m.matrix(x).apply(c));
        return cols;
    };
    auto search = [&](auto&& self, std::size_t start, std::vector<std::vector<BigInt>>& cols)
        -> std::optional<std::vector<std::vector<BigInt>>> {
        if (choice.size() == k) {
            IntMatrix mat = IntMatrix::from_rows(cols).transpose();
            if (!is_unit(determinant(mat))) return std::nullopt;
            std::vector<std::vector<BigInt>> out;
            for (auto c : choice) out.push_back(candidates[c]);
            return out;
        }
        for (std::size_t c = start; c < candidates.size() && tried < kBudget; ++c) {
            ++tried;
            auto extra = orbit_columns(candidates[c]);
            const std::size_t before = cols.size();
            cols.insert(cols.end(), extra.begin(), extra.end());
            // prune if the partial family is already rationally dependent
            bool independent = true;
            if (choice.size() + 1 < k) {
                IntMatrix part = IntMatrix::from_rows(cols);
                auto divisors = elementary_divisors(part);
                independent = std::none_of(divisors.begin(), divisors.end(), [](const BigInt& e) { return e == 0; }) &&
                              divisors.size() == cols.size();
            }
            if (independent) {
                choice.push_back(c);
                auto found = self(self, c + 1, cols);
                if (found) return found;
                choice.pop_back();
            }
            cols.resize(before);
        }
        return std::nullopt;
    };
    std::vector<std::vector<BigInt>> cols;
    return search(search, 0, cols);
}

}  // namespace adams
