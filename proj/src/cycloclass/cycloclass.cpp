#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unistd.h>

#include <zlib.h>

#include "adams/cycloclass.hpp"
#include "adams/error.hpp"

namespace adams {

namespace {

constexpr char kMagic[] = "BERN1";
constexpr std::size_t kMagicLength = 5;

std::mutex memo_mutex;
std::vector<BigRational> memo{BigRational(1)};  // B_0, B_2, ...

void extend_memo(std::uint64_t upto) {
    // sum_{k=0}^{n} C(n+1, k) B_k = 0, odd k > 1 vanish
    while (2 * (memo.size() - 1) < upto) {
        const std::uint64_t n = 2 * memo.size();
        BigInt binom = 1;  // C(n+1, k)
        BigRational s = 0;
        for (std::uint64_t k = 0; k < n; ++k) {
            if (k == 1) {
                s -= BigRational(binom) / 2;
            } else if (k % 2 == 0) {
                s += BigRational(binom) * memo[k / 2];
            }
            binom = binom * static_cast<unsigned long>(n + 1 - k) / static_cast<unsigned long>(k + 1);
        }
        BigRational b = -s / BigRational(static_cast<unsigned long>(n + 1));
        b.canonicalize();
        ensure(b.get_den() == von_staudt_clausen_denominator(n), "Bernoulli denominator violates von Staudt-Clausen");
        memo.push_back(std::move(b));
    }
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

bool get_u32(const std::string& in, std::size_t& at, std::uint32_t& v) {
    if (at + 4 > in.size()) return false;
    v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(in[at + i])) << (8 * i);
    at += 4;
    return true;
}

void put_int(std::string& out, const BigInt& v) {
    std::string s = v.get_str();
    put_u32(out, static_cast<std::uint32_t>(s.size()));
    out += s;
}

bool get_int(const std::string& in, std::size_t& at, BigInt& v) {
    std::uint32_t len = 0;
    if (!get_u32(in, at, len) || at + len > in.size() || len == 0) return false;
    if (v.set_str(in.substr(at, len), 10) != 0) return false;
    at += len;
    return true;
}

std::uint32_t checksum(const std::string& s) {
    return static_cast<std::uint32_t>(
        crc32(0L, reinterpret_cast<const Bytef*>(s.data()), static_cast<uInt>(s.size())));
}

}  // namespace

BigRational BernoulliTable::value(std::uint64_t n) const {
    require(n <= max_index(), "Bernoulli index beyond the table");
    if (n == 1) return BigRational(-1, 2);
    if (n % 2 == 1) return BigRational(0);
    return even_[n / 2];
}

BigInt von_staudt_clausen_denominator(std::uint64_t k) {
    require(k >= 2 && k % 2 == 0, "von Staudt-Clausen applies to even indices >= 2");
    BigInt d = 1;
    for (std::uint64_t q = 1; q * q <= k; ++q) {
        if (k % q != 0) continue;
        if (is_prime(q + 1)) d *= static_cast<unsigned long>(q + 1);
        const std::uint64_t r = k / q;
        if (r != q && is_prime(r + 1)) d *= static_cast<unsigned long>(r + 1);
    }
    return d;
}

void write_bernoulli_cache(const std::filesystem::path& file, const BernoulliTable& table) {
    std::string payload;
    put_u32(payload, static_cast<std::uint32_t>(table.even_values().size()));
    for (const auto& b : table.even_values()) {
        put_int(payload, b.get_num());
        put_int(payload, b.get_den());
    }
    std::string data(kMagic, kMagicLength);
    data += payload;
    put_u32(data, checksum(payload));
    static std::atomic<unsigned> counter{0};
    auto tmp = file;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        require(static_cast<bool>(out), "cannot write Bernoulli cache in " + file.parent_path().string());
        out.write(data.data(), static_cast<std::streamsize>(data.size()));
        require(static_cast<bool>(out), "cannot write Bernoulli cache in " + file.parent_path().string());
    }
    std::filesystem::rename(tmp, file);
}

std::optional<BernoulliTable> read_bernoulli_cache(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream ss;
    ss << in.rdbuf();
    const std::string data = ss.str();
    if (data.size() < kMagicLength + 8 || data.compare(0, kMagicLength, kMagic) != 0) return std::nullopt;
    const std::string payload = data.substr(kMagicLength, data.size() - kMagicLength - 4);
    std::size_t tail = data.size() - 4;
    std::uint32_t stored = 0;
    if (!get_u32(data, tail, stored) || stored != checksum(payload)) return std::nullopt;
    std::size_t at = 0;
    std::uint32_t count = 0;
    if (!get_u32(payload, at, count) || count == 0) return std::nullopt;
    std::vector<BigRational> even;
    for (std::uint32_t i = 0; i < count; ++i) {
        BigInt num, den;
        if (!get_int(payload, at, num) || !get_int(payload, at, den) || den <= 0) return std::nullopt;
        even.push_back(make_rational(num, den));
    }
    if (at != payload.size() || even[0] != 1) return std::nullopt;
    for (std::size_t i = 1; i < even.size(); ++i)
        if (even[i].get_den() != von_staudt_clausen_denominator(2 * i)) return std::nullopt;
    return BernoulliTable(std::move(even));
}

BernoulliTable bernoulli(std::uint64_t upto, const std::optional<std::filesystem::path>& cache_dir) {
    if (upto > kMaxBernoulliIndex) throw SizeLimitError("Bernoulli index exceeds 10000");
    const std::uint64_t top = upto % 2 == 0 ? upto : upto - 1;
    std::lock_guard lock(memo_mutex);
    std::optional<std::filesystem::path> file;
    std::size_t on_disk = 0;
    if (cache_dir) {
        std::filesystem::create_directories(*cache_dir);
        file = *cache_dir / "bernoulli.bin";
        if (auto cached = read_bernoulli_cache(*file)) {
            on_disk = cached->even_values().size();
            if (memo.size() < on_disk) memo = cached->even_values();
        }
    }
    extend_memo(top);
    if (file && on_disk < memo.size()) write_bernoulli_cache(*file, BernoulliTable(memo));
    std::vector<BigRational> even(memo.begin(), memo.begin() + static_cast<std::ptrdiff_t>(top / 2 + 1));
    return BernoulliTable(std::move(even));
}

bool HerbrandReport::certificate(std::uint64_t i) const {
    auto it = even_certificates.find(i);
    require(it != even_certificates.end(), "certificate index must be even and in [2, p - 3]");
    return it->second;
}

HerbrandReport herbrand_report(std::uint64_t p, const std::optional<std::filesystem::path>& cache_dir) {
    require(p >= 3 && is_prime(p), "Herbrand report needs an odd prime");
    auto table = bernoulli(p - 1, cache_dir);
    const unsigned long q = static_cast<unsigned long>(p);
    HerbrandReport r{p, {}, {}};
    for (std::uint64_t i = 3; i + 2 <= p; i += 2)
        if (table.value(p - i).get_num() % q == 0) r.surviving_odd_indices.push_back(i);
    for (std::uint64_t i = 2; i + 3 <= p; i += 2) r.even_certificates[i] = table.value(i).get_num() % q != 0;
    return r;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> irregular_scan(std::uint64_t bound,
                                                                   const std::optional<std::filesystem::path>& cache_dir) {
    if (bound > kMaxIrregularScanBound) throw SizeLimitError("irregular prime scan bound exceeds 500");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    if (bound < 5) return out;
    auto table = bernoulli(bound - 3, cache_dir);
    for (std::uint64_t p = 5; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        for (std::uint64_t k = 2; k + 3 <= p; k += 2)
            if (table.value(k).get_num() % static_cast<unsigned long>(p) == 0) out.emplace_back(p, k);
    }
    return out;
}

bool cft_conditions_hold(const CftPrime& c) {
    if (c.ell == c.p || !is_prime(c.ell) || !is_prime(c.p) || c.p == 2) return false;
    if (c.ell % c.p == 0 || multiplicative_order(c.ell % c.p, c.p) != c.p - 1) return false;
    std::uint64_t modulus = 1;
    for (std::uint64_t i = 0; i < c.capital_N; ++i) modulus *= c.p;
    return pow_mod(c.ell, c.p - 1, modulus) == 1 % modulus;
}

std::vector<CftPrime> cft_prime_search(std::uint64_t p, std::uint64_t capital_N, std::size_t count,
                                       const SearchProgress& progress) {
    require(p >= 3 && is_prime(p), "prime search needs an odd prime p");
    require(capital_N >= 1, "exponent bound must be positive");
    if (count > kMaxCftPrimeCount) throw SizeLimitError("at most 1000 primes can be requested");
    std::uint64_t modulus = 1;
    for (std::uint64_t i = 0; i < capital_N; ++i) {
        if (modulus > (std::uint64_t{1} << 63) / p) throw SizeLimitError("p^N exceeds 2^63");
        modulus *= p;
    }
    std::vector<CftPrime> out;
    std::uint64_t examined = 0;
    for (std::uint64_t ell = 2; out.size() < count; ++ell) {
        ensure(ell != 0, "prime search overflowed");
        if (!is_prime(ell)) continue;
        ++examined;
        CftPrime c{p, capital_N, ell};
        if (ell != p && multiplicative_order(ell % p, p) == p - 1 && pow_mod(ell, p - 1, modulus) == 1 % modulus) {
            ensure(cft_conditions_hold(c), "prime search result fails revalidation");
            out.push_back(c);
        }
        if (progress && examined % 100000 == 0) progress(examined, out.size());
    }
    if (progress) progress(examined, out.size());
    return out;
}

std::optional<std::uint64_t> kernel_group_order(const SylowReport& report) {
    require(report.prime == 2, "kernel group table is indexed by 2-Sylow types");
    if (!report.type_tag) return std::nullopt;
    const auto& t = *report.type_tag;
    if (t == "trivial" || t == "order_le_4" || t == "cyclic_8" || t == "dihedral") return 1;
    if (t == "generalized_quaternion" || t == "semidihedral") return 2;
    return std::nullopt;
}

}  // namespace adams
