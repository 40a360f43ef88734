#include <algorithm>

#include "adams/eigenact.hpp"
#include "adams/error.hpp"
#include "adams/normal_form.hpp"

namespace adams {

namespace {

IntMatrix reduce_mod(IntMatrix m, const BigInt& n) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (auto& x : m.row(r)) {
            x %= n;
            if (x < 0) x += n;
        }
    return m;
}

IntMatrix json_matrix(const nlohmann::json& j, const char* what) {
    require(j.is_array(), std::string(what) + " must be a list of rows");
    std::vector<std::vector<BigInt>> rows;
    std::size_t width = 0;
    for (const auto& row : j) {
        require(row.is_array(), std::string(what) + " must be a list of rows");
        std::vector<BigInt> r;
        for (const auto& x : row) {
            require(x.is_number_integer() || x.is_string(), std::string(what) + " entries must be integers");
            r.emplace_back(x.is_string() ? BigInt(x.get<std::string>()) : BigInt(static_cast<long>(x.get<std::int64_t>())));
        }
        if (!rows.empty()) require(r.size() == width, std::string(what) + " rows differ in length");
        width = r.size();
        rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows, 0);
}

nlohmann::json matrix_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : m.row(r)) {
            if (x.fits_slong_p()) {
                row.push_back(x.get_si());
            } else {
                row.push_back(x.get_str());
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

EigenModule::EigenModule(std::uint64_t p, IntMatrix rels, IntMatrix action, std::optional<std::uint64_t> u)
    : p_(p), rels_(std::move(rels)), action_(std::move(action)) {
    require(p_ >= 3 && is_prime(p_), "eigen module needs an odd prime");
    require(gcd_u64(p_ - 1, p_) == 1, "p - 1 is not invertible modulo p");
    u_ = u ? *u % p_ : primitive_root(p_);
    require(u_ != 0 && multiplicative_order(u_, p_) == p_ - 1, "u must generate (Z/p)^*");
    const std::size_t n = action_.rows();
    require(action_.cols() == n, "action matrix must be square");
    require(rels_.cols() == n || (rels_.rows() == 0 && n == 0), "relation matrix has the wrong number of columns");
    if (rels_.rows() == 0) rels_ = IntMatrix(0, n);

    auto divisors = elementary_divisors(rels_);
    require(divisors.size() == n, "module is not finite");
    order_ = 1;
    exponent_ = 1;
    for (const auto& d : divisors) {
        require(d != 0, "module is not finite");
        BigInt q = d;
        while (q % static_cast<unsigned long>(p_) == 0) q /= static_cast<unsigned long>(p_);
        require(q == 1, "module is not p-power torsion");
        order_ *= d;
        exponent_ = std::max(exponent_, d);
    }

    // action preserves the relations and has order dividing p - 1
    require(columns_vanish(action_ * rels_.transpose()), "action does not preserve the relations");
    IntMatrix power = IntMatrix::identity(n);
    for (std::uint64_t i = 0; i + 1 < p_; ++i) power = reduce_mod(action_ * power, exponent_);
    require(columns_vanish(power - IntMatrix::identity(n)), "action order does not divide p - 1");
}

bool EigenModule::columns_vanish(const IntMatrix& v) const {
    RowLattice lattice(rels_);
    for (std::size_t c = 0; c < v.cols(); ++c) {
        auto col = v.column(c);
        if (!lattice.contains(col)) return false;
    }
    return true;
}

std::vector<BigInt> EigenModule::subgroup_invariants(const IntMatrix& s) const {
    const std::size_t k = s.cols();
    if (k == 0) return {};
    // kernel of Z^k -> M, c -> s c, read off from [s | -rels^T]
    IntMatrix neg = rels_.transpose();
    for (std::size_t r = 0; r < neg.rows(); ++r)
        for (auto& x : neg.row(r)) x = -x;
    IntMatrix ker = integer_kernel(IntMatrix::hstack(s, neg));
    IntMatrix relations(ker.cols(), k);
    for (std::size_t c = 0; c < ker.cols(); ++c)
        for (std::size_t i = 0; i < k; ++i) relations(c, i) = ker(i, c);
    auto divisors = elementary_divisors(relations);
    ensure(divisors.size() == k, "subgroup of a finite module has a free part");
    std::vector<BigInt> out;
    for (const auto& d : divisors) {
        ensure(d != 0, "subgroup of a finite module has a free part");
        if (d != 1) out.push_back(d);
    }
    return out;
}

BigInt EigenModule::subgroup_order(const IntMatrix& s) const {
    BigInt o = 1;
    for (const auto& d : subgroup_invariants(s)) o *= d;
    return o;
}

EigenModule EigenModule::from_json(const nlohmann::json& j) {
    require(j.is_object(), "eigen module JSON must be an object");
    for (const char* key : {"p", "rels", "action"}) require(j.contains(key), std::string("eigen module JSON needs \"") + key + "\"");
    require(j.at("p").is_number_unsigned(), "\"p\" must be a positive integer");
    std::optional<std::uint64_t> u;
    if (j.contains("u") && !j.at("u").is_null()) u = j.at("u").get<std::uint64_t>();
    IntMatrix action = json_matrix(j.at("action"), "action");
    IntMatrix rels = json_matrix(j.at("rels"), "rels");
    if (rels.rows() == 0) rels = IntMatrix(0, action.rows());
    return EigenModule(j.at("p").get<std::uint64_t>(), rels, action, u);
}

nlohmann::json EigenModule::to_json() const {
    return {{"p", p_}, {"u", u_}, {"rels", matrix_json(rels_)}, {"action", matrix_json(action_)}};
}

BigInt teichmuller(std::uint64_t a, std::uint64_t p, const BigInt& modulus) {
    require(a % p != 0, "Teichmueller lift needs a unit");
    BigInt x = BigInt(static_cast<unsigned long>(a)) % modulus;
    for (;;) {
        BigInt y;
        mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), modulus.get_mpz_t());
        if (y == x) return x;
        x = y;
    }
}

EigenDecomposition eigen_decompose(const EigenModule& m) {
    const std::uint64_t p = m.prime();
    const std::size_t n = m.rank();
    const BigInt& big_n = m.exponent();
    const BigInt w = teichmuller(m.generator(), p, big_n);
    BigInt inv_pm1, w_inv;
    const BigInt pm1 = static_cast<unsigned long>(p - 1);
    ensure(mpz_invert(inv_pm1.get_mpz_t(), pm1.get_mpz_t(), big_n.get_mpz_t()) != 0 || big_n == 1,
           "p - 1 is not invertible modulo the exponent");
    if (big_n == 1) inv_pm1 = 0;
    ensure(mpz_invert(w_inv.get_mpz_t(), w.get_mpz_t(), big_n.get_mpz_t()) != 0 || big_n == 1,
           "Teichmueller lift is not a unit");

    // powers psi_{u^t} = action^t
    std::vector<IntMatrix> powers{IntMatrix::identity(n)};
    for (std::uint64_t t = 1; t + 1 < p; ++t) powers.push_back(reduce_mod(m.action() * powers.back(), big_n));

    EigenDecomposition out;
    IntMatrix total(n, n), all_gens(n, 0);
    BigInt product = 1;
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
        // e_i = (1/(p-1)) sum_t omega(u)^(-i t) psi_{u^t}
        BigInt step;
        mpz_powm_ui(step.get_mpz_t(), w_inv.get_mpz_t(), static_cast<unsigned long>(i), big_n.get_mpz_t());
        IntMatrix e(n, n);
        BigInt coef = 1;
        for (std::uint64_t t = 0; t + 1 < p; ++t) {
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) e(r, c) += coef * powers[t](r, c);
            coef = coef * step % big_n;
        }
        for (std::size_t r = 0; r < n; ++r)
            for (auto& x : e.row(r)) x *= inv_pm1;
        e = reduce_mod(e, big_n);
        EigenComponent comp;
        comp.idempotent = e;
        comp.invariants = m.subgroup_invariants(e);
        comp.order = 1;
        for (const auto& d : comp.invariants) comp.order *= d;
        comp.generators = e;
        total = total + e;
        all_gens = IntMatrix::hstack(all_gens, e);
        product *= comp.order;
        out.components.emplace(i, std::move(comp));
    }

    ensure(m.columns_vanish(total - IntMatrix::identity(n)), "idempotents do not sum to the identity");
    for (const auto& [i, ci] : out.components)
        for (const auto& [j, cj] : out.components) {
            IntMatrix prod = ci.idempotent * cj.idempotent;
            ensure(m.columns_vanish(i == j ? prod - ci.idempotent : prod), "idempotents are not orthogonal");
        }
    ensure(product == m.order(), "eigenspace orders do not multiply to the module order");
    ensure(m.subgroup_order(all_gens) == m.order(), "eigenspaces do not generate the module");
    return out;
}

std::set<std::uint64_t> adams_eigen_filter(std::uint64_t p, std::uint64_t d, std::uint64_t ell, bool drop_j0) {
    require(p >= 3 && is_prime(p), "filter needs an odd prime p");
    require(is_prime(ell) && ell != p, "ell must be a prime different from p");
    require(multiplicative_order(ell % p, p) == p - 1, "ell does not generate (Z/p)^*");
    const std::uint64_t lp = ell % p;
    const std::uint64_t ell_inv = static_cast<std::uint64_t>(inverse_mod(static_cast<std::int64_t>(lp), static_cast<std::int64_t>(p)));
    std::set<std::uint64_t> out;
    for (std::uint64_t i = 0; i + 1 < p; ++i) {
        // factor j acts on M^(i) by ell * omega(ell')^i - ell^(-j) with ell' = ell^-1 mod p
        const std::uint64_t first = mul_mod(lp, pow_mod(ell_inv, i, p), p);
        bool survives = false;
        for (std::uint64_t j = drop_j0 ? 1 : 0; j <= d; ++j) {
            const std::uint64_t second = pow_mod(ell_inv, j, p);
            const bool non_unit = first == second;
            ensure(non_unit == ((i % (p - 1)) == ((j + 1) % (p - 1))), "eigenvalue criterion disagrees with i = j + 1");
            survives = survives || non_unit;
        }
        if (survives) out.insert(i);
    }
    return out;
}

BigInt annihilator_multiplier(std::uint64_t ell, std::uint64_t d) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i <= d; ++i) r *= static_cast<unsigned long>(ell - 1);
    return r;
}

AnnihilationBound annihilation_bound(const FiniteGroup& g) {
    const auto s = static_cast<std::uint64_t>(valuation(g.order(), 2));
    const auto t = static_cast<std::uint64_t>(valuation(g.order(), 3));
    auto two = sylow_report(g, 2);
    auto three = sylow_report(g, 3);
    ensure(two.type_tag && three.type_tag, "Sylow reports for 2 and 3 carry a type tag");
    const std::string& tag2 = *two.type_tag;
    std::uint64_t a = s + 1;
    if (tag2 == "trivial" || tag2 == "order_le_4" || tag2 == "cyclic_8" || tag2 == "dihedral") {
        a = 0;
    } else if (tag2 == "abelian_other" || tag2 == "generalized_quaternion" || tag2 == "semidihedral") {
        a = 1;
    }
    const bool abelian3 = *three.type_tag != "nonabelian";
    const std::uint64_t b = abelian3 ? 0 : t - 1;
    BigInt bound = 1;
    for (std::uint64_t i = 0; i < a; ++i) bound *= 2;
    for (std::uint64_t i = 0; i < b; ++i) bound *= 3;
    return {a, b, bound, tag2, *three.type_tag};
}

}  // namespace adams
