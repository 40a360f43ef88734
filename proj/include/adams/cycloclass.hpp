#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "adams/groups.hpp"
#include "adams/integer.hpp"

namespace adams {

inline constexpr std::uint64_t kMaxBernoulliIndex = 10000;

// B_0 .. B_max with B_1 = -1/2; odd indices above 1 are zero.
class BernoulliTable {
public:
    BernoulliTable() = default;
    explicit BernoulliTable(std::vector<BigRational> even) : even_(std::move(even)) {}

    std::uint64_t max_index() const { return even_.empty() ? 0 : 2 * (even_.size() - 1); }
    BigRational value(std::uint64_t n) const;
    const std::vector<BigRational>& even_values() const { return even_; }

private:
    std::vector<BigRational> even_;  // B_0, B_2, B_4, ...
};

// Product of the primes p with (p - 1) | k, for even k >= 2.
BigInt von_staudt_clausen_denominator(std::uint64_t k);

// With a cache directory the table is read from and written to bernoulli.bin there.
BernoulliTable bernoulli(std::uint64_t upto, const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

// Cache file codec; read returns nullopt on a bad header or checksum.
void write_bernoulli_cache(const std::filesystem::path& file, const BernoulliTable& table);
std::optional<BernoulliTable> read_bernoulli_cache(const std::filesystem::path& file);

struct HerbrandReport {
    std::uint64_t prime;
    std::vector<std::uint64_t> surviving_odd_indices;
    std::map<std::uint64_t, bool> even_certificates;  // even i in [2, p - 3]

    bool certificate(std::uint64_t i) const;
};

HerbrandReport herbrand_report(std::uint64_t p, const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

inline constexpr std::uint64_t kMaxIrregularScanBound = 500;
// Pairs (p, k), p <= bound prime, even k <= p - 3, p | numerator(B_k); sorted.
std::vector<std::pair<std::uint64_t, std::uint64_t>> irregular_scan(
    std::uint64_t bound, const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

struct CftPrime {
    std::uint64_t p;
    std::uint64_t capital_N;
    std::uint64_t ell;
};

// Called with (candidates examined, primes found so far).
using SearchProgress = std::function<void(std::uint64_t, std::size_t)>;

inline constexpr std::size_t kMaxCftPrimeCount = 1000;
std::vector<CftPrime> cft_prime_search(std::uint64_t p, std::uint64_t capital_N, std::size_t count,
                                       const SearchProgress& progress = {});
// ell generates (Z/p)^*, ell^(p-1) = 1 mod p^N, ell != p.
bool cft_conditions_hold(const CftPrime& c);

// 1, 2, or nullopt when the 2-Sylow type is outside the known table.
std::optional<std::uint64_t> kernel_group_order(const SylowReport& report);

}  // namespace adams
