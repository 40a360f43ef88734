#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adams {

// Polynomials over F_p, lowest degree first, no trailing zeros.
using PolyModP = std::vector<std::uint64_t>;

bool is_irreducible_mod_p(const PolyModP& f, std::uint64_t p);

// F_{p^f} = F_p[x]/(m) where m is the least monic irreducible of degree f in
// the order of its coefficient list read as a base-p number.
class FiniteField {
public:
    using Element = std::vector<std::uint64_t>;  // f coefficients

    FiniteField(std::uint64_t p, unsigned f);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return f_; }
    std::uint64_t size() const { return q_; }
    const PolyModP& modulus() const { return modulus_; }

    Element zero() const { return Element(f_, 0); }
    Element one() const;
    Element from_int(std::int64_t v) const;
    Element add(const Element& a, const Element& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element pow(Element a, std::uint64_t e) const;
    bool is_zero(const Element& a) const;

    // First element of exact multiplicative order n in enumeration order; n | q - 1.
    Element root_of_unity(std::uint64_t n) const;

    std::string element_to_string(const Element& a) const;

private:
    std::uint64_t p_;
    unsigned f_;
    std::uint64_t q_;
    PolyModP modulus_;
};

}  // namespace adams
