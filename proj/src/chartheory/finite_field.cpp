#include "adams/finite_field.hpp"

#include <limits>

#include "adams/error.hpp"
#include "adams/integer.hpp"

namespace adams {

namespace {

void trim(PolyModP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyModP poly_sub(PolyModP a, const PolyModP& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

PolyModP poly_rem(PolyModP a, const PolyModP& m, std::uint64_t p) {
    trim(a);
    const std::uint64_t lead_inv = pow_mod(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        std::uint64_t c = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - mul_mod(c, m[i], p)) % p;
        trim(a);
    }
    return a;
}

PolyModP poly_mulmod(const PolyModP& a, const PolyModP& b, const PolyModP& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyModP r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a[i], b[j], p)) % p;
    return poly_rem(std::move(r), m, p);
}

PolyModP poly_powmod(PolyModP base, std::uint64_t e, const PolyModP& m, std::uint64_t p) {
    PolyModP r = poly_rem(PolyModP{1}, m, p);
    base = poly_rem(base, m, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PolyModP poly_gcd(PolyModP a, PolyModP b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        a = poly_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// x^(p^k) mod m by repeated p-th powers.
PolyModP frobenius_power(std::uint64_t k, const PolyModP& m, std::uint64_t p) {
    PolyModP x = poly_rem(PolyModP{0, 1}, m, p);
    for (std::uint64_t i = 0; i < k; ++i) x = poly_powmod(x, p, m, p);
    return x;
}

}  // namespace

bool is_irreducible_mod_p(const PolyModP& f, std::uint64_t p) {
    PolyModP g = f;
    trim(g);
    require(g.size() >= 2, "irreducibility test needs a non-constant polynomial");
    const std::uint64_t n = g.size() - 1;
    if (n == 1) return true;
    const PolyModP x{0, 1};
    if (!poly_sub(frobenius_power(n, g, p), x, p).empty()) return false;
    for (auto r : prime_factors(n)) {
        PolyModP h = poly_sub(frobenius_power(n / r, g, p), x, p);
        if (poly_gcd(g, h, p).size() != 1) return false;
    }
    return true;
}

FiniteField::FiniteField(std::uint64_t p, unsigned f) : p_(p), f_(f) {
    require(is_prime(p), "finite field characteristic must be prime");
    require(f >= 1, "finite field degree must be positive");
    q_ = 1;
    for (unsigned i = 0; i < f; ++i) {
        require(q_ <= std::numeric_limits<std::uint64_t>::max() / 2 / p, "finite field too large");
        q_ *= p;
    }
    PolyModP cand(f + 1, 0);
    cand[f] = 1;
    for (;;) {
        bool constant_ok = f == 1 || cand[0] != 0;
        if (constant_ok && is_irreducible_mod_p(cand, p)) break;
        std::size_t i = 0;
        while (i < f && ++cand[i] == p) cand[i++] = 0;
        ensure(i < f, "no irreducible polynomial found");
    }
    modulus_ = cand;
}

FiniteField::Element FiniteField::one() const { return from_int(1); }

FiniteField::Element FiniteField::from_int(std::int64_t v) const {
    Element e(f_, 0);
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    e[0] = static_cast<std::uint64_t>(r);
    return e;
}

FiniteField::Element FiniteField::add(const Element& a, const Element& b) const {
    Element r(f_);
    for (unsigned i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

FiniteField::Element FiniteField::mul(const Element& a, const Element& b) const {
    PolyModP r = poly_mulmod(PolyModP(a.begin(), a.end()), PolyModP(b.begin(), b.end()), modulus_, p_);
    r.resize(f_, 0);
    return r;
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
    Element r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

bool FiniteField::is_zero(const Element& a) const {
    for (auto c : a)
        if (c != 0) return false;
    return true;
}

FiniteField::Element FiniteField::root_of_unity(std::uint64_t n) const {
    require(n >= 1 && (q_ - 1) % n == 0, "root of unity order must divide q - 1");
    if (n == 1) return one();
    const auto primes = prime_factors(n);
    Element cand(f_, 0);
    for (;;) {
        std::size_t i = 0;
        while (i < f_ && ++cand[i] == p_) cand[i++] = 0;
        ensure(i < f_, "no root of unity of the requested order");
        Element b = pow(cand, (q_ - 1) / n);
        bool exact = true;
        for (auto r : primes)
            if (pow(b, n / r) == one()) {
                exact = false;
                break;
            }
        if (exact) return b;
    }
}

std::string FiniteField::element_to_string(const Element& a) const {
    std::string s = "[";
    for (unsigned i = 0; i < f_; ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + "]";
}

}  // namespace adams
