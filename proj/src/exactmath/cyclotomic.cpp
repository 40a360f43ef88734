#include "adams/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "adams/error.hpp"

namespace adams {
namespace {

struct FieldData {
    std::vector<BigInt> phi;               // Phi_n, lowest degree first, monic
    std::vector<std::vector<BigInt>> pow;  // pow[k] = x^k mod Phi_n, k in [0, n)
};

std::vector<BigInt> poly_divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    // den monic; returns num / den, asserting zero remainder.
    std::size_t dn = den.size() - 1;
    std::vector<BigInt> q(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        BigInt c = num[i];
        q[i - dn] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dn; ++i) ensure(num[i] == 0, "inexact cyclotomic division");
    return q;
}

const FieldData& field_data(std::uint32_t n) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<FieldData>> cache;
    require(n >= 1, "conductor must be positive");
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<BigInt> p(n + 1);
    p[0] = -1;
    p[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d == 0) p = poly_divide_exact(p, field_data(d).phi);
    }
    auto fd = std::make_unique<FieldData>();
    fd->phi = p;
    std::size_t deg = p.size() - 1;
    std::vector<BigInt> cur(deg);
    cur[0] = 1;
    if (deg == 0) cur.clear();
    fd->pow.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) {
        fd->pow.push_back(cur);
        // multiply by x and reduce
        std::vector<BigInt> next(deg);
        BigInt top = deg ? cur[deg - 1] : BigInt(0);
        for (std::size_t i = deg; i-- > 1;) next[i] = cur[i - 1];
        for (std::size_t i = 0; i < deg; ++i) next[i] -= top * p[i];
        cur = std::move(next);
    }
    std::lock_guard lock(mu);
    auto [it, inserted] = cache.emplace(n, std::move(fd));
    return *it->second;
}

std::uint32_t reduce_exponent(std::int64_t k, std::uint32_t n) {
    std::int64_t r = k % static_cast<std::int64_t>(n);
    if (r < 0) r += n;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(std::uint32_t n) { return field_data(n).phi; }

CyclotomicElement::CyclotomicElement(std::uint32_t conductor)
    : n_(conductor), num_(field_data(conductor).phi.size() - 1) {}

CyclotomicElement::CyclotomicElement(std::uint32_t conductor, const BigRational& value)
    : CyclotomicElement(conductor) {
    num_[0] = value.get_num();
    den_ = value.get_den();
}

CyclotomicElement::CyclotomicElement(std::uint32_t conductor, std::vector<BigRational> coeffs)
    : CyclotomicElement(conductor) {
    require(coeffs.size() == num_.size(), "coefficient vector length must equal phi(n)");
    BigInt l = 1;
    for (auto& c : coeffs) {
        c.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    den_ = l;
    for (std::size_t i = 0; i < coeffs.size(); ++i) num_[i] = coeffs[i].get_num() * (l / coeffs[i].get_den());
    normalize();
}

CyclotomicElement CyclotomicElement::zeta_power(std::uint32_t conductor, std::int64_t k) {
    CyclotomicElement r(conductor);
    r.num_ = field_data(conductor).pow[reduce_exponent(k, conductor)];
    return r;
}

CyclotomicElement CyclotomicElement::from_exponents(
    std::uint32_t conductor, const std::vector<std::pair<std::int64_t, BigInt>>& terms) {
    const auto& fd = field_data(conductor);
    CyclotomicElement r(conductor);
    for (const auto& [k, c] : terms) {
        if (c == 0) continue;
        const auto& row = fd.pow[reduce_exponent(k, conductor)];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i] != 0) r.num_[i] += c * row[i];
        }
    }
    return r;
}

BigRational CyclotomicElement::coeff(std::size_t i) const { return make_rational(num_.at(i), den_); }

std::vector<BigRational> CyclotomicElement::coeffs() const {
    std::vector<BigRational> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
    return out;
}

bool CyclotomicElement::is_zero() const {
    for (const auto& c : num_) {
        if (c != 0) return false;
    }
    return true;
}

bool CyclotomicElement::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i) {
        if (num_[i] != 0) return false;
    }
    return true;
}

BigRational CyclotomicElement::to_rational() const {
    require(is_rational(), "cyclotomic element is not rational");
    return make_rational(num_[0], den_);
}

void CyclotomicElement::normalize() {
    BigInt g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (is_zero()) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

void CyclotomicElement::check_same_field(const CyclotomicElement& o) const {
    if (n_ != o.n_) {
        throw DomainError("cyclotomic conductors differ: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }
}

CyclotomicElement CyclotomicElement::operator-() const {
    CyclotomicElement r = *this;
    for (auto& c : r.num_) c = -c;
    return r;
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& o) {
    check_same_field(o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& o) { return *this += -o; }

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& o) {
    check_same_field(o);
    const auto& fd = field_data(n_);
    std::size_t d = num_.size();
    std::vector<BigInt> prod(d == 0 ? 0 : 2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (num_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.num_[j] != 0) prod[i + j] += num_[i] * o.num_[j];
        }
    }
    std::vector<BigInt> out(d);
    for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        if (k < d) {
            out[k] += prod[k];
            continue;
        }
        const auto& row = fd.pow[k % n_];
        for (std::size_t i = 0; i < d; ++i) {
            if (row[i] != 0) out[i] += prod[k] * row[i];
        }
    }
    num_ = std::move(out);
    den_ *= o.den_;
    normalize();
    return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const BigRational& q) {
    for (auto& c : num_) c *= q.get_num();
    den_ *= q.get_den();
    normalize();
    return *this;
}

CyclotomicElement CyclotomicElement::galois(std::int64_t t) const {
    require(gcd_u64(reduce_exponent(t, n_), n_) == 1 || n_ == 1, "Galois exponent must be prime to the conductor");
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i) * t, num_[i]);
    }
    CyclotomicElement r = from_exponents(n_, terms);
    r.den_ = den_;
    r.normalize();
    return r;
}

CyclotomicElement CyclotomicElement::inverse() const {
    require(!is_zero(), "inverse of zero");
    CyclotomicElement others(n_, BigRational(1));
    for (std::uint32_t t = 2; t < n_; ++t) {
        if (gcd_u64(t, n_) == 1) others *= galois(t);
    }
    CyclotomicElement norm = others * *this;
    ensure(norm.is_rational(), "norm is not rational");
    BigRational nq = norm.to_rational();
    return others * BigRational(1 / nq);
}

CyclotomicElement CyclotomicElement::pow(std::uint64_t e) const {
    CyclotomicElement result(n_, BigRational(1));
    CyclotomicElement base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string CyclotomicElement::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (i) s += ", ";
        s += adams::to_string(coeff(i));
    }
    return s + "]_" + std::to_string(n_);
}

CyclotomicElement cyclo_embed(const CyclotomicElement& value, std::uint32_t target) {
    std::uint32_t n = value.conductor();
    require(target >= 1 && target % n == 0, "conductor " + std::to_string(n) + " does not divide " +
                                                std::to_string(target));
    std::int64_t step = target / n;
    std::vector<std::pair<std::int64_t, BigInt>> terms;
    for (std::size_t i = 0; i < value.degree(); ++i) {
        if (value.numerators()[i] != 0) terms.emplace_back(static_cast<std::int64_t>(i) * step, value.numerators()[i]);
    }
    CyclotomicElement r = CyclotomicElement::from_exponents(target, terms);
    r *= BigRational(BigRational(1) / BigRational(value.denominator()));
    return r;
}

bool lies_in_subfield(const CyclotomicElement& value, std::uint32_t d) {
    std::uint32_t m = value.conductor();
    require(d >= 1 && m % d == 0, "subfield conductor must divide the conductor");
    for (std::uint32_t t = 1 + d; t < m + 1; t += d) {
        std::uint32_t tm = t % m;
        if (tm == 1 || gcd_u64(tm, m) != 1) continue;
        if (!(value.galois(tm) == value)) return false;
    }
    return true;
}

std::optional<CyclotomicElement> cyclo_restrict(const CyclotomicElement& value, std::uint32_t d) {
    if (!lies_in_subfield(value, d)) return std::nullopt;
    std::uint32_t m = value.conductor();
    std::size_t rows = value.degree();
    std::size_t cols = CyclotomicElement(d).degree();
    // Solve sum_j c_j embed(zeta_d^j) = value by Gaussian elimination over Q.
    std::vector<std::vector<BigRational>> a(rows, std::vector<BigRational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
        auto col = cyclo_embed(CyclotomicElement::zeta_power(d, static_cast<std::int64_t>(j)), m);
        for (std::size_t i = 0; i < rows; ++i) a[i][j] = col.coeff(i);
    }
    for (std::size_t i = 0; i < rows; ++i) a[i][cols] = value.coeff(i);
    std::vector<std::size_t> pivcol;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        BigRational inv = 1 / a[r][c];
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            BigRational f = a[i][c];
            for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
        }
        pivcol.push_back(c);
        ++r;
    }
    std::vector<BigRational> sol(cols);
    for (std::size_t i = 0; i < pivcol.size(); ++i) sol[pivcol[i]] = a[i][cols];
    CyclotomicElement result(d, sol);
    ensure(cyclo_embed(result, m) == value, "cyclotomic restriction failed");
    return result;
}

CyclotomicElement evaluate_polynomial(const std::vector<BigRational>& poly, const CyclotomicElement& x) {
    CyclotomicElement acc(x.conductor());
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc *= x;
        acc += CyclotomicElement(x.conductor(), poly[i]);
    }
    return acc;
}

}  // namespace adams
