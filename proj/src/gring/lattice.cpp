#include <algorithm>

#include "adams/error.hpp"
#include "adams/gring.hpp"
#include "adams/normal_form.hpp"

namespace adams {

namespace {

// Element matrices by closure over the generators; every product s*x is checked.
std::vector<SparseMatrix> expand_action(const FiniteGroup& g, std::size_t rank, const std::vector<SparseMatrix>& gens) {
    require(gens.size() == g.generators().size(), "one matrix per group generator is required");
    for (const auto& m : gens) require(m.rows() == rank && m.cols() == rank, "action matrix has the wrong size");
    std::vector<SparseMatrix> elems(g.order());
    std::vector<bool> known(g.order(), false);
    elems[g.identity()] = SparseMatrix::identity(rank);
    known[g.identity()] = true;
    std::vector<Elem> queue{g.identity()};
    for (std::size_t h = 0; h < queue.size(); ++h) {
        Elem x = queue[h];
        for (std::size_t s = 0; s < gens.size(); ++s) {
            Elem y = g.mul(g.generators()[s], x);
            SparseMatrix m = gens[s] * elems[x];
            if (!known[y]) {
                elems[y] = std::move(m);
                known[y] = true;
                queue.push_back(y);
            } else if (!(elems[y] == m)) {
                throw DomainError("action matrices do not satisfy the group relations");
            }
        }
    }
    ensure(queue.size() == g.order(), "generators do not reach every element");
    return elems;
}

SparseMatrix block_diagonal(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) c.set_column(j, a.column(j));
    for (std::size_t j = 0; j < b.cols(); ++j) {
        SparseMatrix::Column col;
        for (const auto& [r, v] : b.column(j)) col.emplace_back(a.rows() + r, v);
        c.set_column(a.cols() + j, std::move(col));
    }
    return c;
}

SparseMatrix permutation_matrix(const Permutation& p) {
    SparseMatrix m(p.size(), p.size());
    for (std::size_t x = 0; x < p.size(); ++x) m.set_column(x, {{p[x], BigInt(1)}});
    return m;
}

}  // namespace

GRingLattice::GRingLattice(FiniteGroup g, std::size_t rank, std::vector<SparseMatrix> generator_matrices,
                           std::optional<std::uint64_t> inverted_prime)
    : group_(std::move(g)), rank_(rank), generators_(std::move(generator_matrices)), inverted_prime_(inverted_prime) {
    if (inverted_prime_) require(is_prime(*inverted_prime_), "inverted element must be a prime");
    elements_ = expand_action(group_, rank_, generators_);
}

GRingLattice GRingLattice::trivial(const FiniteGroup& g, std::size_t rank) {
    return GRingLattice(g, rank, std::vector<SparseMatrix>(g.generators().size(), SparseMatrix::identity(rank)));
}

GRingLattice GRingLattice::regular(const FiniteGroup& g) {
    std::vector<SparseMatrix> gens;
    for (Elem s : g.generators()) {
        Permutation p(g.order());
        for (Elem h = 0; h < g.order(); ++h) p[h] = g.mul(s, h);
        gens.push_back(permutation_matrix(p));
    }
    return GRingLattice(g, g.order(), std::move(gens));
}

GRingLattice GRingLattice::from_linear_character(const FiniteGroup& g, std::size_t irreducible) {
    auto t = CharacterTable::of(g);
    require(irreducible < t->size() && t->degree(irreducible) == 1, "not a linear character");
    std::vector<SparseMatrix> gens;
    for (Elem s : g.generators()) {
        const auto& v = t->irreducible(irreducible)[g.class_of(s)];
        require(v.is_rational(), "linear character is not rational");
        SparseMatrix m(1, 1);
        m.set_column(0, {{0, v.to_rational().get_num()}});
        gens.push_back(std::move(m));
    }
    return GRingLattice(g, 1, std::move(gens));
}

GRingLattice GRingLattice::sign(const FiniteGroup& g) {
    auto t = CharacterTable::of(g);
    for (std::size_t i = 1; i < t->size(); ++i) {
        if (t->degree(i) != 1) continue;
        const auto& chi = t->irreducible(i);
        if (std::all_of(chi.begin(), chi.end(), [](const auto& v) { return v.is_rational(); }))
            return from_linear_character(g, i);
    }
    throw DomainError("group has no nontrivial +-1 valued linear character");
}

GRingLattice GRingLattice::permutation(const FiniteGroup& g) {
    require(g.order() == 1 || !g.permutations().empty(), "group was not given by permutations");
    std::vector<SparseMatrix> gens;
    for (const auto& p : g.permutations()) gens.push_back(permutation_matrix(p));
    return GRingLattice(g, g.degree(), std::move(gens));
}

GRingLattice GRingLattice::augmentation(const FiniteGroup& g) {
    auto perm = permutation(g);
    const std::size_t n = perm.rank();
    require(n >= 1, "augmentation lattice needs a nonempty permutation domain");
    IntMatrix basis(n, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        basis(i, i) = 1;
        basis(i + 1, i) = -1;
    }
    return perm.restrict_to(basis);
}

GRingLattice GRingLattice::direct_sum(const GRingLattice& a, const GRingLattice& b) {
    require(a.group().hash() == b.group().hash(), "direct sum of lattices over different groups");
    std::vector<SparseMatrix> gens;
    for (std::size_t s = 0; s < a.generators_.size(); ++s) gens.push_back(block_diagonal(a.generators_[s], b.generators_[s]));
    std::optional<std::uint64_t> inv = a.inverted_prime_ ? a.inverted_prime_ : b.inverted_prime_;
    return GRingLattice(a.group_, a.rank_ + b.rank_, std::move(gens), inv);
}

GRingLattice GRingLattice::corpus(const std::string& group, const std::string& kind) {
    auto g = corpus_group(group);
    if (kind == "trivial") return trivial(g);
    if (kind == "sign") return sign(g);
    if (kind == "regular") return regular(g);
    if (kind == "perm") return permutation(g);
    if (kind == "aug") return augmentation(g);
    throw DomainError("unknown lattice kind: " + kind);
}

std::vector<std::pair<std::string, std::string>> GRingLattice::corpus_names() {
    return {{"C2", "trivial"}, {"C2", "sign"}, {"C2", "regular"}, {"C3", "trivial"}, {"C3", "regular"},
            {"C4", "trivial"}, {"C4", "sign"}, {"C4", "regular"}, {"S3", "trivial"}, {"S3", "sign"},
            {"S3", "regular"}, {"S3", "aug"}};
}

GRingLattice GRingLattice::with_inverted_prime(std::optional<std::uint64_t> ell) const {
    GRingLattice copy = *this;
    if (ell) require(is_prime(*ell), "inverted element must be a prime");
    copy.inverted_prime_ = ell;
    return copy;
}

std::vector<BigInt> GRingLattice::traces() const {
    std::vector<BigInt> out;
    for (const auto& c : group_.conjugacy_classes()) out.push_back(elements_[c.representative].trace());
    return out;
}

VirtualCharacter GRingLattice::character() const {
    auto t = CharacterTable::of(group_);
    ClassFunction f;
    for (const auto& tr : traces()) f.emplace_back(t->conductor(), BigRational(tr));
    return VirtualCharacter::from_values(t, f);
}

GRingLattice GRingLattice::restrict_to(const IntMatrix& basis) const {
    require(basis.rows() == rank_, "sublattice basis has the wrong ambient rank");
    const std::size_t k = basis.cols();
    if (k == 0) return GRingLattice(group_, 0, std::vector<SparseMatrix>(generators_.size(), SparseMatrix(0, 0)), inverted_prime_);
    IntMatrix left = left_inverse_of_saturated(basis);
    auto sparse_basis = SparseMatrix::from_dense(basis);
    auto sparse_left = SparseMatrix::from_dense(left);
    std::vector<SparseMatrix> gens;
    for (const auto& m : generators_) {
        auto image = m * sparse_basis;
        auto coords = sparse_left * image;
        require(sparse_basis * coords == image, "sublattice is not stable under the group");
        gens.push_back(std::move(coords));
    }
    return GRingLattice(group_, k, std::move(gens), inverted_prime_);
}

GRingLattice GRingLattice::from_json(const nlohmann::json& j) {
    try {
        FiniteGroup g = j.at("group").is_string() ? corpus_group(j.at("group").get<std::string>())
                                                  : FiniteGroup::from_json(j.at("group"));
        const auto rank = j.at("rank").get<std::size_t>();
        std::vector<SparseMatrix> gens;
        const auto& jg = j.at("gens");
        for (std::size_t s = 0; s < g.generators().size(); ++s) {
            std::string label = "g" + std::to_string(s);
            require(jg.contains(label), "lattice JSON is missing generator " + label);
            auto rows = jg.at(label).get<std::vector<std::vector<std::int64_t>>>();
            require(rows.size() == rank, "generator matrix has the wrong number of rows");
            IntMatrix m(rank, rank);
            for (std::size_t r = 0; r < rank; ++r) {
                require(rows[r].size() == rank, "generator matrix has the wrong number of columns");
                for (std::size_t c = 0; c < rank; ++c) m(r, c) = static_cast<long>(rows[r][c]);
            }
            gens.push_back(SparseMatrix::from_dense(m));
        }
        std::optional<std::uint64_t> inv;
        if (j.contains("invert") && !j.at("invert").is_null()) inv = j.at("invert").get<std::uint64_t>();
        return GRingLattice(g, rank, std::move(gens), inv);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed lattice JSON: ") + e.what());
    }
}

nlohmann::json GRingLattice::to_json() const {
    nlohmann::json j;
    bool named = false;
    try {
        named = corpus_group(group_.name()).hash() == group_.hash();
    } catch (const DomainError&) {
    }
    j["group"] = named ? nlohmann::json(group_.name()) : group_.to_json();
    j["rank"] = rank_;
    nlohmann::json gens = nlohmann::json::object();
    for (std::size_t s = 0; s < generators_.size(); ++s) {
        auto d = generators_[s].to_dense();
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < rank_; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < rank_; ++c) row.push_back(d(r, c).get_si());
            rows.push_back(row);
        }
        gens["g" + std::to_string(s)] = rows;
    }
    j["gens"] = gens;
    j["invert"] = inverted_prime_ ? nlohmann::json(*inverted_prime_) : nlohmann::json(nullptr);
    return j;
}

AugmentedLattice::AugmentedLattice(GRingLattice base, FiniteGroup aux, std::vector<SparseMatrix> aux_generator_matrices)
    : base_(std::move(base)), aux_(std::move(aux)) {
    aux_elements_ = expand_action(aux_, base_.rank(), aux_generator_matrices);
    for (const auto& a : aux_generator_matrices)
        for (const auto& g : base_.generator_matrices())
            require(a * g == g * a, "auxiliary action does not commute with the group action");
}

AugmentedLattice AugmentedLattice::inflate(const GRingLattice& m, std::uint64_t ell) {
    auto c = cyclic_group(ell);
    return AugmentedLattice(m, c, std::vector<SparseMatrix>(c.generators().size(), SparseMatrix::identity(m.rank())));
}

AugmentedLattice AugmentedLattice::free_cyclic(const GRingLattice& m, std::uint64_t ell) {
    auto c = cyclic_group(ell);
    Permutation shift(ell);
    for (std::size_t i = 0; i < ell; ++i) shift[i] = static_cast<std::uint32_t>((i + 1) % ell);
    auto cyc = permutation_matrix(shift);
    std::vector<SparseMatrix> gens;
    for (const auto& g : m.generator_matrices()) gens.push_back(kronecker(SparseMatrix::identity(ell), g));
    GRingLattice base(m.group(), ell * m.rank(), std::move(gens), m.inverted_prime());
    return AugmentedLattice(base, c, {kronecker(cyc, SparseMatrix::identity(m.rank()))});
}

AugmentedLattice AugmentedLattice::cyclotomic_twist(const GRingLattice& m, std::uint64_t ell, std::uint64_t a) {
    require(is_prime(ell), "cyclotomic twist needs a prime");
    auto c = cyclic_group(ell);
    const std::size_t d = ell - 1;
    // multiplication by z on Z[z]/(1 + z + ... + z^(ell-1)) in the basis 1, z, ..., z^(ell-2)
    IntMatrix z(d, d);
    for (std::size_t j = 0; j + 1 < d; ++j) z(j + 1, j) = 1;
    for (std::size_t i = 0; i < d; ++i) z(i, d - 1) = -1;
    IntMatrix za = IntMatrix::identity(d);
    for (std::uint64_t i = 0; i < a % ell; ++i) za = z * za;
    std::vector<SparseMatrix> gens;
    for (const auto& g : m.generator_matrices()) gens.push_back(kronecker(SparseMatrix::identity(d), g));
    GRingLattice base(m.group(), d * m.rank(), std::move(gens), m.inverted_prime());
    return AugmentedLattice(base, c, {kronecker(SparseMatrix::from_dense(za), SparseMatrix::identity(m.rank()))});
}

BoundedComplex::BoundedComplex(int lowest_degree, std::vector<GRingLattice> terms, std::vector<SparseMatrix> differentials)
    : lowest_(lowest_degree), terms_(std::move(terms)), differentials_(std::move(differentials)) {
    verify();
}

BoundedComplex::BoundedComplex(int lowest_degree, std::vector<GRingLattice> terms, std::vector<SparseMatrix> differentials,
                               FiniteGroup aux, std::vector<std::vector<SparseMatrix>> aux_elements)
    : lowest_(lowest_degree),
      terms_(std::move(terms)),
      differentials_(std::move(differentials)),
      aux_(std::move(aux)),
      aux_elements_(std::move(aux_elements)) {
    verify();
}

const GRingLattice& BoundedComplex::term(int degree) const {
    require(degree >= lowest_ && degree <= highest_degree(), "degree outside the complex");
    return terms_[static_cast<std::size_t>(degree - lowest_)];
}

const SparseMatrix& BoundedComplex::differential(int degree) const {
    require(degree >= lowest_ && degree < highest_degree(), "no differential in this degree");
    return differentials_[static_cast<std::size_t>(degree - lowest_)];
}

const SparseMatrix& BoundedComplex::aux_matrix(int degree, Elem a) const {
    require(aux_.has_value(), "complex has no auxiliary action");
    return aux_elements_[static_cast<std::size_t>(degree - lowest_)][a];
}

void BoundedComplex::verify() const {
    require(!terms_.empty(), "complex needs at least one term");
    require(differentials_.size() + 1 == terms_.size(), "complex needs one differential between consecutive terms");
    for (const auto& t : terms_) require(t.group().hash() == terms_[0].group().hash(), "terms over different groups");
    for (std::size_t i = 0; i < differentials_.size(); ++i) {
        const auto& d = differentials_[i];
        require(d.cols() == terms_[i].rank() && d.rows() == terms_[i + 1].rank(), "differential has the wrong shape");
        for (std::size_t s = 0; s < terms_[i].generator_matrices().size(); ++s)
            require(d * terms_[i].generator_matrices()[s] == terms_[i + 1].generator_matrices()[s] * d,
                    "differential is not G-equivariant");
        if (i + 1 < differentials_.size())
            require((differentials_[i + 1] * d).is_zero(), "differential does not square to zero");
    }
    if (!aux_) return;
    require(aux_elements_.size() == terms_.size(), "auxiliary action needs matrices for every term");
    const auto& a = *aux_;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& mats = aux_elements_[i];
        require(mats.size() == a.order(), "auxiliary action needs a matrix for every element");
        require(mats[a.identity()] == SparseMatrix::identity(terms_[i].rank()), "auxiliary identity acts nontrivially");
        for (Elem s : a.generators()) {
            for (Elem x = 0; x < a.order(); ++x)
                require(mats[s] * mats[x] == mats[a.mul(s, x)], "auxiliary matrices do not satisfy the group relations");
            for (const auto& gm : terms_[i].generator_matrices())
                require(mats[s] * gm == gm * mats[s], "auxiliary action does not commute with the group action");
            if (i + 1 < terms_.size())
                require(differentials_[i] * mats[s] == aux_elements_[i + 1][s] * differentials_[i],
                        "differential is not equivariant for the auxiliary action");
        }
    }
}

BoundedComplex BoundedComplex::restrict_aux_to_cyclic(Elem c) const {
    require(aux_.has_value(), "complex has no auxiliary action");
    const auto& a = *aux_;
    const std::uint32_t o = a.element_order(c);
    auto cyc = cyclic_group(o);
    std::vector<std::vector<SparseMatrix>> mats(terms_.size());
    // element i of cyclic_group(o) is the i-th power of its generator
    for (std::size_t i = 0; i < terms_.size(); ++i)
        for (std::uint32_t k = 0; k < o; ++k) mats[i].push_back(aux_elements_[i][a.pow(c, k)]);
    return BoundedComplex(lowest_, terms_, differentials_, cyc, std::move(mats));
}

BigInt ProductCharacter::rank() const {
    BigInt r = 0;
    for (std::size_t j = 0; j < coeffs.rows(); ++j)
        for (std::size_t i = 0; i < coeffs.cols(); ++i)
            r += coeffs(j, i) * static_cast<unsigned long>(aux->degree(j) * group->degree(i));
    return r;
}

ProductCharacter ProductCharacter::operator-(const ProductCharacter& o) const {
    require(aux == o.aux && group == o.group, "product characters over different groups");
    return {aux, group, coeffs - o.coeffs};
}

ProductCharacter ProductCharacter::operator+(const ProductCharacter& o) const {
    require(aux == o.aux && group == o.group, "product characters over different groups");
    return {aux, group, coeffs + o.coeffs};
}

VirtualCharacter ProductCharacter::component(std::size_t j) const {
    std::vector<BigInt> c(coeffs.cols());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs(j, i);
    return VirtualCharacter(group, std::move(c));
}

ProductCharacter product_character(const std::shared_ptr<const CharacterTable>& aux,
                                   const std::shared_ptr<const CharacterTable>& group,
                                   const std::vector<std::vector<BigInt>>& traces) {
    const auto& ga = aux->group();
    const auto& gg = group->group();
    const std::uint32_t ea = aux->conductor(), eg = group->conductor();
    const std::uint32_t common = static_cast<std::uint32_t>(gcd_u64(ea, eg));
    IntMatrix coeffs(aux->size(), group->size());
    for (std::size_t j = 0; j < aux->size(); ++j) {
        // y(cg) = (1/|A|) sum_ca |ca| X(ca, cg) conj(lambda_j(ca)), the lambda_j-isotypic trace
        ClassFunction y;
        for (std::size_t cg = 0; cg < gg.conjugacy_classes().size(); ++cg) {
            CyclotomicElement s(ea);
            for (std::size_t ca = 0; ca < ga.conjugacy_classes().size(); ++ca) {
                if (traces[ca][cg] == 0) continue;
                s += aux->irreducible(j)[ca].conj() * BigRational(traces[ca][cg] * static_cast<unsigned long>(aux->class_size(ca)));
            }
            s *= BigRational(1, static_cast<unsigned long>(ga.order()));
            auto r = cyclo_restrict(s, common);
            ensure(r.has_value(), "isotypic trace leaves the common cyclotomic field");
            y.push_back(cyclo_embed(*r, eg));
        }
        auto c = group->decompose(y);
        for (std::size_t i = 0; i < c.size(); ++i) coeffs(j, i) = c[i];
    }
    return {aux, group, std::move(coeffs)};
}

ProductCharacter euler_character(const BoundedComplex& c) {
    require(c.has_aux(), "Euler character needs an auxiliary action");
    auto ta = CharacterTable::of(c.aux());
    auto tg = CharacterTable::of(c.group());
    const auto& ca = c.aux().conjugacy_classes();
    const auto& cg = c.group().conjugacy_classes();
    std::vector<std::vector<BigInt>> traces(ca.size(), std::vector<BigInt>(cg.size(), 0));
    for (int n = c.lowest_degree(); n <= c.highest_degree(); ++n) {
        const int sign = (n % 2 == 0) ? 1 : -1;
        for (std::size_t a = 0; a < ca.size(); ++a)
            for (std::size_t g = 0; g < cg.size(); ++g)
                traces[a][g] += sign * trace_of_product(c.aux_matrix(n, ca[a].representative),
                                                        c.term(n).matrix(cg[g].representative));
    }
    return product_character(ta, tg, traces);
}

ProductCharacter lattice_product_character(const AugmentedLattice& n) {
    auto ta = CharacterTable::of(n.aux());
    auto tg = CharacterTable::of(n.base().group());
    const auto& ca = n.aux().conjugacy_classes();
    const auto& cg = n.base().group().conjugacy_classes();
    std::vector<std::vector<BigInt>> traces(ca.size(), std::vector<BigInt>(cg.size()));
    for (std::size_t a = 0; a < ca.size(); ++a)
        for (std::size_t g = 0; g < cg.size(); ++g)
            traces[a][g] = trace_of_product(n.aux_matrix(ca[a].representative), n.base().matrix(cg[g].representative));
    return product_character(ta, tg, traces);
}

ProductCharacter inflate_character(const std::shared_ptr<const CharacterTable>& aux, const VirtualCharacter& chi) {
    IntMatrix coeffs(aux->size(), chi.table()->size());
    for (std::size_t i = 0; i < coeffs.cols(); ++i) coeffs(0, i) = chi.coeffs()[i];
    return {aux, chi.table(), std::move(coeffs)};
}

bool in_free_ideal(const ProductCharacter& x) {
    for (std::size_t j = 1; j < x.coeffs.rows(); ++j)
        for (std::size_t i = 0; i < x.coeffs.cols(); ++i)
            if (x.coeffs(j, i) * static_cast<unsigned long>(x.aux->degree(0)) !=
                x.coeffs(0, i) * static_cast<unsigned long>(x.aux->degree(j)))
                return false;
    return true;
}

GRingLattice cyclic_invariants(const AugmentedLattice& n) {
    const auto& aux = n.aux();
    require(aux.order() >= 1 && (aux.order() == 1 || (is_prime(aux.order()) && aux.generators().size() >= 1)),
            "cyclic invariants need an auxiliary group of prime order");
    const std::size_t r = n.base().rank();
    IntMatrix fix(0, r);
    for (Elem s : aux.generators()) fix = IntMatrix::vstack(fix, (n.aux_matrix(s) - SparseMatrix::identity(r)).to_dense());
    IntMatrix k = fix.rows() == 0 ? IntMatrix::identity(r) : integer_kernel(fix);
    return n.base().restrict_to(k);
}

VirtualCharacter zeta_map(const AugmentedLattice& n) {
    const std::uint64_t ell = n.aux().order();
    require(is_prime(ell), "zeta map needs a C_ell action with ell prime");
    require(n.base().group().order() % ell != 0, "ell must not divide the group order");
    auto inv = cyclic_invariants(n);
    return inv.character().scaled(BigInt(static_cast<unsigned long>(ell))) - n.base().character();
}

}  // namespace adams
