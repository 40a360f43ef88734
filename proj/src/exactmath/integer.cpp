#include "adams/integer.hpp"

#include <numeric>

#include "adams/error.hpp"

namespace adams {

BigRational make_rational(const BigInt& num, const BigInt& den) {
    require(den != 0, "zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRational(BigInt(s));
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw DomainError("malformed rational: '" + s + "'");
    }
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, r = ((a % m) + m) % m;
    while (r != 0) {
        std::int64_t q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    require(g == 1, "element not invertible modulo " + std::to_string(m));
    return ((x % m) + m) % m;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic for all 64-bit n.
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto p : prime_factors(n)) r = r / p * (p - 1);
    return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

int valuation(std::uint64_t n, std::uint64_t p) {
    require(n != 0 && p > 1, "valuation of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    require(gcd_u64(a % m, m) == 1, "order of a non-unit");
    if (m == 1) return 1;
    std::uint64_t ord = euler_phi(m);
    for (auto q : prime_factors(ord)) {
        while (ord % q == 0 && pow_mod(a, ord / q, m) == 1) ord /= q;
    }
    return ord;
}

std::uint64_t primitive_root(std::uint64_t p) {
    require(is_prime(p), "primitive_root needs a prime");
    if (p == 2) return 1;
    for (std::uint64_t g = 2; g < p; ++g) {
        if (multiplicative_order(g, p) == p - 1) return g;
    }
    throw InternalError("no primitive root found");
}

}  // namespace adams
