#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace adams {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
BigRational make_rational(const BigInt& num, const BigInt& den);

// "num/den", always with an explicit denominator.
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& n);
BigRational parse_rational(const std::string& s);

// Machine-integer helpers used by the number-theoretic modules.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);
bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);  // distinct, ascending
std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
int valuation(std::uint64_t n, std::uint64_t p);
// Smallest positive generator of (Z/pZ)^*; p prime.
std::uint64_t primitive_root(std::uint64_t p);
// Multiplicative order of a modulo m (gcd(a, m) = 1).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

}  // namespace adams
