#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "adams/chartheory.hpp"
#include "adams/error.hpp"

namespace adams {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;

u64 inv_mod(u64 a, u64 q) { return pow_mod(a, q - 2, q); }

// Reduced row echelon basis of the span of rows; returns pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, u64 q) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        u64 s = inv_mod(rows[r][c], q);
        for (auto& x : rows[r]) x = x * s % q;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            u64 f = rows[i][c];
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = (rows[i][j] + (q - f) * rows[r][j]) % q;
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

// Basis of {x : A x = 0} for square A.
std::vector<Vec> nullspace(std::vector<Vec> a, u64 q) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    auto pivots = rref(a, q);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (q - a[r][f]) % q;
        out.push_back(std::move(v));
    }
    return out;
}

// Characteristic polynomial (lowest degree first) via Hessenberg reduction.
Vec charpoly(std::vector<Vec> h, u64 q) {
    const std::size_t n = h.size();
    for (std::size_t c = 0; c + 2 < n; ++c) {
        std::size_t p = c + 1;
        while (p < n && h[p][c] == 0) ++p;
        if (p == n) continue;
        if (p != c + 1) {
            std::swap(h[p], h[c + 1]);
            for (auto& row : h) std::swap(row[p], row[c + 1]);
        }
        u64 piv_inv = inv_mod(h[c + 1][c], q);
        for (std::size_t r = c + 2; r < n; ++r) {
            if (h[r][c] == 0) continue;
            u64 u = h[r][c] * piv_inv % q;
            for (std::size_t j = 0; j < n; ++j) h[r][j] = (h[r][j] + (q - u) * h[c + 1][j]) % q;
            for (std::size_t i = 0; i < n; ++i) h[i][c + 1] = (h[i][c + 1] + u * h[i][r]) % q;
        }
    }
    std::vector<Vec> p(n + 1);
    p[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        Vec next(m + 1, 0);
        for (std::size_t k = 0; k < m; ++k) {
            next[k + 1] = (next[k + 1] + p[m - 1][k]) % q;
            next[k] = (next[k] + (q - h[m - 1][m - 1]) * p[m - 1][k]) % q;
        }
        u64 t = 1;
        for (std::size_t i = m - 1; i >= 1; --i) {
            t = t * h[i][i - 1] % q;
            u64 coef = h[i - 1][m - 1] * t % q;
            if (coef == 0) continue;
            for (std::size_t k = 0; k < p[i - 1].size(); ++k) next[k] = (next[k] + (q - coef) * p[i - 1][k]) % q;
        }
        p[m] = std::move(next);
    }
    return p[n];
}

u64 eval_poly(const Vec& f, u64 x, u64 q) {
    u64 r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % q;
    return r;
}

u64 dixon_prime_for(u64 order, u64 e) {
    u64 bound = static_cast<u64>(2.0 * std::sqrt(static_cast<double>(order))) + 2;
    for (u64 q = e + 1;; q += e)
        if (q > bound && q > 2 && is_prime(q)) return q;
}

bool value_less(const ClassFunction& a, const ClassFunction& b) {
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (a[c] == b[c]) continue;
        if (a[c].denominator() != b[c].denominator()) return a[c].denominator() < b[c].denominator();
        return a[c].numerators() < b[c].numerators();
    }
    return false;
}

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::string, std::shared_ptr<const CharacterTable>>& cache() {
    static std::map<std::string, std::shared_ptr<const CharacterTable>> c;
    return c;
}

}  // namespace

std::shared_ptr<const CharacterTable> CharacterTable::of(const FiniteGroup& g) {
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache().find(g.hash());
        if (it != cache().end()) return it->second;
    }
    auto t = compute(g);
    std::lock_guard<std::mutex> lock(cache_mutex());
    return cache().emplace(g.hash(), t).first->second;
}

std::shared_ptr<const CharacterTable> CharacterTable::compute(const FiniteGroup& g) {
    if (g.order() > kMaxCharacterTableOrder)
        throw SizeLimitError("character tables are limited to order " + std::to_string(kMaxCharacterTableOrder));
    std::shared_ptr<CharacterTable> t(new CharacterTable(g));
    const auto& cls = g.conjugacy_classes();
    const std::size_t k = cls.size();
    const u64 order = g.order();
    const u64 e = g.exponent();
    const u64 q = dixon_prime_for(order, e);
    t->conductor_ = static_cast<std::uint32_t>(e);
    t->dixon_prime_ = q;
    const std::size_t id = g.identity_class();

    // Common eigenspaces of the class matrices (M_j)_{il} = #{x in C_j : x^-1 z_l in C_i}.
    std::vector<std::vector<Vec>> spaces;
    {
        std::vector<Vec> all(k, Vec(k, 0));
        for (std::size_t i = 0; i < k; ++i) all[i][i] = 1;
        spaces.push_back(std::move(all));
    }
    for (std::size_t j = 0; j < k; ++j) {
        bool split = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
        if (split) break;
        if (j == id) continue;
        std::vector<Vec> m(k, Vec(k, 0));
        for (std::size_t l = 0; l < k; ++l) {
            Elem z = cls[l].representative;
            for (Elem x : cls[j].members) ++m[g.class_of(g.mul(g.inv(x), z))][l];
        }
        std::vector<std::vector<Vec>> next;
        for (auto& basis : spaces) {
            if (basis.size() == 1) {
                next.push_back(std::move(basis));
                continue;
            }
            auto pivots = rref(basis, q);
            const std::size_t d = basis.size();
            std::vector<Vec> a(d, Vec(d, 0));
            for (std::size_t b = 0; b < d; ++b) {
                for (std::size_t r = 0; r < d; ++r) {
                    u64 s = 0;
                    for (std::size_t l = 0; l < k; ++l) s = (s + m[pivots[r]][l] * basis[b][l]) % q;
                    a[r][b] = s;
                }
            }
            Vec poly = charpoly(a, q);
            std::size_t found = 0;
            for (u64 lam = 0; lam < q && found < d; ++lam) {
                if (eval_poly(poly, lam, q) != 0) continue;
                auto shifted = a;
                for (std::size_t r = 0; r < d; ++r) shifted[r][r] = (shifted[r][r] + q - lam) % q;
                auto null = nullspace(shifted, q);
                std::vector<Vec> sub;
                for (const auto& coords : null) {
                    Vec v(k, 0);
                    for (std::size_t b = 0; b < d; ++b)
                        for (std::size_t l = 0; l < k; ++l) v[l] = (v[l] + coords[b] * basis[b][l]) % q;
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
            }
            ensure(found == d, "class matrix is not diagonalizable over the splitting prime");
        }
        spaces = std::move(next);
    }
    ensure(spaces.size() == k, "class algebra did not split into one-dimensional eigenspaces");

    std::vector<std::vector<std::size_t>> power_classes(k);
    for (std::size_t l = 0; l < k; ++l) {
        Elem z = cls[l].representative;
        Elem y = g.identity();
        for (std::uint32_t r = 0; r < g.element_order(z); ++r) {
            power_classes[l].push_back(g.class_of(y));
            y = g.mul(y, z);
        }
    }
    std::vector<std::size_t> inverse_class(k);
    for (std::size_t l = 0; l < k; ++l) inverse_class[l] = g.inverse_class(l);
    const u64 w = pow_mod(primitive_root(q), (q - 1) / e, q);

    std::vector<std::pair<ClassFunction, u64>> chars;
    for (auto& space : spaces) {
        Vec omega = space[0];
        ensure(omega[id] != 0, "central character vanishes at the identity class");
        u64 s = inv_mod(omega[id], q);
        for (auto& x : omega) x = x * s % q;
        u64 norm = 0;
        for (std::size_t l = 0; l < k; ++l)
            norm = (norm + omega[l] * omega[inverse_class[l]] % q * inv_mod(cls[l].members.size() % q, q)) % q;
        u64 target = order % q * inv_mod(norm, q) % q;
        u64 deg = 0;
        for (u64 d = 1; d * d <= order; ++d)
            if (d * d % q == target) {
                deg = d;
                break;
            }
        ensure(deg != 0, "no degree matches the central character");
        Vec chi(k);
        for (std::size_t l = 0; l < k; ++l)
            chi[l] = deg % q * omega[l] % q * inv_mod(cls[l].members.size() % q, q) % q;
        ClassFunction values;
        for (std::size_t l = 0; l < k; ++l) {
            const u64 o = power_classes[l].size();
            const u64 step = e / o;
            const u64 o_inv = inv_mod(o % q, q);
            std::vector<std::pair<std::int64_t, BigInt>> terms;
            u64 total = 0;
            for (u64 kk = 0; kk < o; ++kk) {
                u64 sum = 0;
                for (u64 r = 0; r < o; ++r) {
                    u64 expo = (e - (step * kk % e) * r % e) % e;
                    sum = (sum + chi[power_classes[l][r]] * pow_mod(w, expo, q)) % q;
                }
                u64 mult = sum * o_inv % q;
                ensure(mult <= deg, "eigenvalue multiplicity out of range");
                total += mult;
                if (mult) terms.emplace_back(static_cast<std::int64_t>(step * kk), BigInt(static_cast<unsigned long>(mult)));
            }
            ensure(total == deg, "eigenvalue multiplicities do not sum to the degree");
            values.push_back(CyclotomicElement::from_exponents(static_cast<std::uint32_t>(e), terms));
        }
        chars.emplace_back(std::move(values), deg);
    }

    std::size_t trivial = k;
    for (std::size_t i = 0; i < k; ++i) {
        bool all_one = true;
        for (const auto& v : chars[i].first) all_one = all_one && v == CyclotomicElement(t->conductor_, BigRational(1));
        if (all_one) trivial = i;
    }
    ensure(trivial < k, "trivial character missing");
    std::sort(chars.begin(), chars.end(), [&](const auto& a, const auto& b) {
        bool ta = a.second == 1 && std::all_of(a.first.begin(), a.first.end(), [&](const auto& v) {
            return v == CyclotomicElement(t->conductor_, BigRational(1));
        });
        bool tb = b.second == 1 && std::all_of(b.first.begin(), b.first.end(), [&](const auto& v) {
            return v == CyclotomicElement(t->conductor_, BigRational(1));
        });
        if (ta != tb) return ta;
        if (a.second != b.second) return a.second < b.second;
        return value_less(a.first, b.first);
    });
    for (auto& [vals, deg] : chars) {
        t->irreducibles_.push_back(std::move(vals));
        t->degrees_.push_back(deg);
    }

    u64 sum_sq = 0;
    for (auto d : t->degrees_) sum_sq += d * d;
    ensure(sum_sq == order, "squared degrees do not sum to the group order");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            auto ip = t->inner_product(t->irreducibles_[i], t->irreducibles_[j]);
            ensure(ip == CyclotomicElement(t->conductor_, BigRational(i == j ? 1 : 0)),
                   "character table fails row orthogonality");
        }
    return t;
}

std::size_t CharacterTable::class_size(std::size_t c) const { return group_.conjugacy_classes()[c].members.size(); }

CyclotomicElement CharacterTable::inner_product(const ClassFunction& a, const ClassFunction& b) const {
    CyclotomicElement s(conductor_);
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (a[c].is_zero() || b[c].is_zero()) continue;
        auto term = a[c] * b[c].conj();
        term *= BigRational(static_cast<unsigned long>(class_size(c)));
        s += term;
    }
    s *= BigRational(1, static_cast<unsigned long>(group_.order()));
    return s;
}

std::vector<BigInt> CharacterTable::decompose(const ClassFunction& f) const {
    std::vector<BigInt> out;
    for (const auto& chi : irreducibles_) {
        auto ip = inner_product(f, chi);
        if (!ip.is_rational() || ip.to_rational().get_den() != 1)
            throw InternalError("class function is not a virtual character (non-integral decomposition)");
        out.push_back(ip.to_rational().get_num());
    }
    return out;
}

std::optional<std::size_t> CharacterTable::find(const ClassFunction& f) const {
    for (std::size_t i = 0; i < irreducibles_.size(); ++i)
        if (irreducibles_[i] == f) return i;
    return std::nullopt;
}

ClassFunction CharacterTable::zero_function() const {
    return ClassFunction(irreducibles_.size(), CyclotomicElement(conductor_));
}

}  // namespace adams
