#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adams/integer.hpp"

namespace adams {

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<BigInt>& cyclotomic_polynomial(std::uint32_t n);

// An element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
// i.e. a residue modulo Phi_n. Stored as integer numerators over one positive
// common denominator kept in lowest terms, so equality is coefficient-wise.
class CyclotomicElement {
public:
    CyclotomicElement() : CyclotomicElement(1) {}
    explicit CyclotomicElement(std::uint32_t conductor);
    CyclotomicElement(std::uint32_t conductor, const BigRational& value);
    CyclotomicElement(std::uint32_t conductor, std::vector<BigRational> coeffs);

    static CyclotomicElement zeta_power(std::uint32_t conductor, std::int64_t k);
    // Sum of c_k zeta^k for arbitrary exponents k (reduced mod n and Phi_n).
    static CyclotomicElement from_exponents(std::uint32_t conductor,
                                            const std::vector<std::pair<std::int64_t, BigInt>>& terms);

    std::uint32_t conductor() const { return n_; }
    std::size_t degree() const { return num_.size(); }
    BigRational coeff(std::size_t i) const;
    std::vector<BigRational> coeffs() const;
    const std::vector<BigInt>& numerators() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_integral() const { return den_ == 1; }
    // Value as a rational; throws DomainError unless is_rational().
    BigRational to_rational() const;

    CyclotomicElement operator-() const;
    CyclotomicElement& operator+=(const CyclotomicElement& o);
    CyclotomicElement& operator-=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const CyclotomicElement& o);
    CyclotomicElement& operator*=(const BigRational& q);
    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const BigRational& q) { return a *= q; }
    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a.n_ == b.n_ && a.den_ == b.den_ && a.num_ == b.num_;
    }

    // zeta -> zeta^t, gcd(t, n) = 1.
    CyclotomicElement galois(std::int64_t t) const;
    CyclotomicElement conj() const { return galois(-1); }
    // Multiplicative inverse (nonzero elements), via the norm.
    CyclotomicElement inverse() const;
    CyclotomicElement pow(std::uint64_t e) const;

    std::string to_string() const;

private:
    void normalize();
    void check_same_field(const CyclotomicElement& o) const;

    std::uint32_t n_;
    std::vector<BigInt> num_;
    BigInt den_{1};
};

// Image of value in Q(zeta_target); requires conductor | target.
CyclotomicElement cyclo_embed(const CyclotomicElement& value, std::uint32_t target_conductor);

// True iff value (in Q(zeta_m)) lies in the subfield Q(zeta_d), d | m.
bool lies_in_subfield(const CyclotomicElement& value, std::uint32_t d);

// Inverse of cyclo_embed on elements of the subfield; nullopt if the element
// does not lie in Q(zeta_d).
std::optional<CyclotomicElement> cyclo_restrict(const CyclotomicElement& value, std::uint32_t d);

// Horner evaluation of a rational polynomial (lowest degree first) at x.
CyclotomicElement evaluate_polynomial(const std::vector<BigRational>& poly, const CyclotomicElement& x);

}  // namespace adams
