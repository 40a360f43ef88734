#include "adams/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "adams/error.hpp"
#include "adams/hash.hpp"
#include "adams/integer.hpp"

namespace adams {

extern const char* const kGroupCorpusJson;

namespace {

constexpr std::size_t kTableLimit = 4096;

std::string perm_key(const Permutation& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size() * sizeof(std::uint32_t));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Permutation invert(const Permutation& a) {
    Permutation r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
    return r;
}

std::uint64_t perm_order(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        ord = lcm_u64(ord, len);
    }
    return ord;
}

}  // namespace

Elem FiniteGroup::lookup(const Permutation& p) const {
    auto it = perm_index_.find(perm_key(p));
    if (it == perm_index_.end()) throw InternalError("permutation product left the group");
    return it->second;
}

const Permutation& FiniteGroup::element_permutation(Elem a) const {
    require(from_perms_, "group was not built from permutations");
    return elem_perms_[a];
}

Elem FiniteGroup::mul(Elem a, Elem b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
    return lookup(compose(elem_perms_[a], elem_perms_[b]));
}

Elem FiniteGroup::pow(Elem g, std::int64_t k) const {
    std::int64_t o = element_order_[g];
    k %= o;
    if (k < 0) k += o;
    Elem result = identity_, base = g;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

bool FiniteGroup::is_abelian() const {
    for (Elem a : generators_)
        for (Elem b : generators_)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

FiniteGroup FiniteGroup::from_table(std::string name, const std::vector<std::vector<std::int64_t>>& table) {
    const std::size_t n = table.size();
    require(n >= 1, "group table is empty");
    if (n > kMaxGroupOrder) throw SizeLimitError("group order exceeds " + std::to_string(kMaxGroupOrder));
    FiniteGroup g;
    g.name_ = std::move(name);
    g.order_ = n;
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        require(table[a].size() == n, "group table is not square");
        std::vector<bool> seen(n, false);
        for (std::size_t b = 0; b < n; ++b) {
            std::int64_t v = table[a][b];
            require(v >= 0 && static_cast<std::size_t>(v) < n, "group table entry out of range");
            require(!seen[v], "group table row is not a permutation");
            seen[v] = true;
            g.table_[a * n + b] = static_cast<std::uint16_t>(v);
        }
    }
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<bool> seen(n, false);
        for (std::size_t a = 0; a < n; ++a) {
            auto v = g.table_[a * n + b];
            require(!seen[v], "group table column is not a permutation");
            seen[v] = true;
        }
    }
    bool found = false;
    for (std::size_t e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x) ok = g.table_[e * n + x] == x && g.table_[x * n + e] == x;
        if (ok) {
            g.identity_ = static_cast<Elem>(e);
            found = true;
        }
    }
    require(found, "group table has no identity element");
    g.verify_associative();
    // minimal generating set, greedy in index order
    std::vector<bool> in_sub(n, false);
    in_sub[g.identity_] = true;
    for (Elem x = 0; x < n; ++x) {
        if (in_sub[x]) continue;
        g.generators_.push_back(x);
        std::deque<Elem> queue;
        std::vector<Elem> members;
        for (Elem y = 0; y < n; ++y)
            if (in_sub[y]) members.push_back(y);
        queue.assign(members.begin(), members.end());
        while (!queue.empty()) {
            Elem y = queue.front();
            queue.pop_front();
            for (Elem s : g.generators_) {
                Elem z = g.table_[static_cast<std::size_t>(y) * n + s];
                if (!in_sub[z]) {
                    in_sub[z] = true;
                    queue.push_back(z);
                }
            }
        }
    }
    std::string bytes(reinterpret_cast<const char*>(g.table_.data()), g.table_.size() * sizeof(std::uint16_t));
    g.hash_ = sha256_hex("table:" + bytes);
    g.finish();
    return g;
}

void FiniteGroup::verify_associative() const {
    const std::size_t n = order_;
    auto at = [&](std::size_t a, std::size_t b) -> std::size_t { return table_[a * n + b]; };
    if (n <= 512) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                std::size_t ab = at(a, b);
                for (std::size_t c = 0; c < n; ++c)
                    require(at(ab, c) == at(a, at(b, c)), "group table is not associative");
            }
        return;
    }
    const std::uint64_t trials = std::min<std::uint64_t>(10ULL * n * n, 10000000ULL);
    std::mt19937_64 rng(0x5eedULL ^ n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
        require(at(at(a, b), c) == at(a, at(b, c)), "group table is not associative");
    }
}

FiniteGroup FiniteGroup::from_permutations(std::string name, std::vector<Permutation> gens, std::size_t degree) {
    for (const auto& p : gens) {
        require(p.size() == degree, "permutation has wrong degree");
        std::vector<bool> seen(degree, false);
        for (auto x : p) {
            require(x < degree && !seen[x], "generator is not a permutation");
            seen[x] = true;
        }
    }
    FiniteGroup g;
    g.name_ = std::move(name);
    g.degree_ = degree;
    g.perms_ = gens;
    g.from_perms_ = true;
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    g.elem_perms_.push_back(id);
    g.perm_index_.emplace(perm_key(id), 0);
    // left_by[s][x] = index of gens[s] * x
    std::vector<std::vector<Elem>> left_by(gens.size());
    std::vector<std::pair<Elem, std::size_t>> parent{{0, 0}};
    for (std::size_t head = 0; head < g.elem_perms_.size(); ++head) {
        for (std::size_t s = 0; s < gens.size(); ++s) {
            Permutation y = compose(gens[s], g.elem_perms_[head]);
            auto [it, fresh] = g.perm_index_.emplace(perm_key(y), static_cast<Elem>(g.elem_perms_.size()));
            if (fresh) {
                if (g.elem_perms_.size() >= kMaxGroupOrder)
                    throw SizeLimitError("group order exceeds " + std::to_string(kMaxGroupOrder));
                g.elem_perms_.push_back(std::move(y));
                parent.emplace_back(static_cast<Elem>(head), s);
            }
            left_by[s].push_back(it->second);
        }
    }
    const std::size_t n = g.elem_perms_.size();
    g.order_ = n;
    g.identity_ = 0;
    for (const auto& p : gens) g.generators_.push_back(g.perm_index_.at(perm_key(p)));
    if (n <= kTableLimit) {
        g.table_.resize(n * n);
        for (std::size_t b = 0; b < n; ++b) g.table_[b] = static_cast<std::uint16_t>(b);
        for (std::size_t a = 1; a < n; ++a) {
            auto [pa, s] = parent[a];
            for (std::size_t b = 0; b < n; ++b)
                g.table_[a * n + b] = static_cast<std::uint16_t>(left_by[s][g.table_[pa * n + b]]);
        }
    }
    // element numbering follows generator order, so the key lists elements by index
    std::string key = "perm:" + std::to_string(degree) + "|gens";
    for (Elem s : g.generators_) key += ":" + std::to_string(s);
    for (const auto& p : g.elem_perms_) key += "|" + perm_key(p);
    g.hash_ = sha256_hex(key);
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::from_cycles(std::string name,
                                     const std::vector<std::vector<std::vector<std::int64_t>>>& gens) {
    std::set<std::int64_t> points;
    for (const auto& gen : gens)
        for (const auto& cyc : gen)
            for (auto x : cyc) {
                require(x >= 0, "cycle points must be non-negative");
                points.insert(x);
            }
    std::vector<std::int64_t> labels(points.begin(), points.end());
    std::map<std::int64_t, std::uint32_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<std::uint32_t>(i);
    std::vector<Permutation> perms;
    for (const auto& gen : gens) {
        Permutation p(labels.size());
        std::iota(p.begin(), p.end(), 0u);
        std::vector<bool> used(labels.size(), false);
        for (const auto& cyc : gen) {
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                auto from = index[cyc[k]];
                require(!used[from], "cycles of a generator must be disjoint");
                used[from] = true;
                p[from] = index[cyc[(k + 1) % cyc.size()]];
            }
        }
        perms.push_back(std::move(p));
    }
    auto g = from_permutations(std::move(name), std::move(perms), labels.size());
    g.point_labels_ = std::move(labels);
    return g;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
    require(j.is_object(), "group JSON must be an object");
    std::string name = j.value("name", std::string("G"));
    try {
        if (j.contains("table")) return from_table(name, j.at("table").get<std::vector<std::vector<std::int64_t>>>());
        if (j.contains("perm_gens"))
            return from_cycles(name, j.at("perm_gens").get<std::vector<std::vector<std::vector<std::int64_t>>>>());
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed group JSON: ") + e.what());
    }
    throw DomainError("group JSON needs \"table\" or \"perm_gens\"");
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t n = a.order() * b.order();
    if (n > kMaxGroupOrder) throw SizeLimitError("group order exceeds " + std::to_string(kMaxGroupOrder));
    // (x, y) has index x * |b| + y
    std::vector<std::vector<std::int64_t>> table(n, std::vector<std::int64_t>(n));
    for (std::size_t x1 = 0; x1 < a.order(); ++x1)
        for (std::size_t y1 = 0; y1 < b.order(); ++y1)
            for (std::size_t x2 = 0; x2 < a.order(); ++x2)
                for (std::size_t y2 = 0; y2 < b.order(); ++y2)
                    table[x1 * b.order() + y1][x2 * b.order() + y2] =
                        static_cast<std::int64_t>(a.mul(x1, x2)) * b.order() + b.mul(y1, y2);
    return from_table(a.name() + "x" + b.name(), table);
}

void FiniteGroup::finish() {
    const std::size_t n = order_;
    inverse_.assign(n, 0);
    element_order_.assign(n, 0);
    if (!table_.empty()) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (table_[static_cast<std::size_t>(a) * n + b] == identity_) {
                    inverse_[a] = b;
                    break;
                }
        for (Elem a = 0; a < n; ++a) {
            std::uint32_t k = 1;
            for (Elem x = a; x != identity_; x = table_[static_cast<std::size_t>(x) * n + a]) ++k;
            element_order_[a] = k;
        }
    } else {
        for (Elem a = 0; a < n; ++a) {
            inverse_[a] = lookup(invert(elem_perms_[a]));
            element_order_[a] = static_cast<std::uint32_t>(perm_order(elem_perms_[a]));
        }
    }
    exponent_ = 1;
    for (auto o : element_order_) exponent_ = lcm_u64(exponent_, o);
    compute_classes();
}

void FiniteGroup::compute_classes() {
    const std::size_t n = order_;
    class_of_.assign(n, SIZE_MAX);
    classes_.clear();
    for (Elem g = 0; g < n; ++g) {
        if (class_of_[g] != SIZE_MAX) continue;
        std::size_t c = classes_.size();
        std::vector<Elem> members{g};
        class_of_[g] = c;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (Elem s : generators_) {
                Elem y = conjugate(members[head], s);
                if (class_of_[y] == SIZE_MAX) {
                    class_of_[y] = c;
                    members.push_back(y);
                }
            }
        std::sort(members.begin(), members.end());
        classes_.push_back({g, std::move(members)});
    }
}

std::vector<std::size_t> FiniteGroup::power_map(std::int64_t k) const {
    std::vector<std::size_t> out(classes_.size());
    for (std::size_t c = 0; c < classes_.size(); ++c) out[c] = class_of_[pow(classes_[c].representative, k)];
    return out;
}

nlohmann::json FiniteGroup::to_json() const {
    nlohmann::json j;
    j["name"] = name_;
    j["order"] = order_;
    if (from_perms_) {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& p : perms_) {
            nlohmann::json cycles = nlohmann::json::array();
            std::vector<bool> seen(p.size(), false);
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (seen[i] || p[i] == i) continue;
                nlohmann::json cyc = nlohmann::json::array();
                for (std::size_t k = i; !seen[k]; k = p[k]) {
                    seen[k] = true;
                    cyc.push_back(point_labels_.empty() ? static_cast<std::int64_t>(k) : point_labels_[k]);
                }
                cycles.push_back(cyc);
            }
            gens.push_back(cycles);
        }
        j["perm_gens"] = gens;
    } else {
        std::vector<std::vector<Elem>> t(order_, std::vector<Elem>(order_));
        for (Elem a = 0; a < order_; ++a)
            for (Elem b = 0; b < order_; ++b) t[a][b] = mul(a, b);
        j["table"] = t;
    }
    return j;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g) { return g.conjugacy_classes(); }

std::vector<QClass> q_classes(const FiniteGroup& g) {
    const auto& cls = g.conjugacy_classes();
    std::vector<std::size_t> parent(cls.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const std::uint64_t e = g.exponent();
    for (std::uint64_t t = 2; t < e; ++t) {
        if (gcd_u64(t, e) != 1) continue;
        auto pm = g.power_map(static_cast<std::int64_t>(t));
        for (std::size_t c = 0; c < cls.size(); ++c) {
            std::size_t a = find(c), b = find(pm[c]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, QClass> by_root;
    for (std::size_t c = 0; c < cls.size(); ++c) {
        auto& q = by_root[find(c)];
        q.conj_classes.push_back(c);
        q.members.insert(q.members.end(), cls[c].members.begin(), cls[c].members.end());
    }
    std::vector<QClass> out;
    for (auto& [root, q] : by_root) {
        std::sort(q.members.begin(), q.members.end());
        q.representative = q.members.front();
        out.push_back(std::move(q));
    }
    std::sort(out.begin(), out.end(), [](const QClass& a, const QClass& b) { return a.representative < b.representative; });
    return out;
}

std::vector<QClass> p_regular_qclasses(const FiniteGroup& g, std::uint64_t p) {
    require(p == 0 || is_prime(p), "characteristic must be 0 or a prime");
    auto all = q_classes(g);
    if (p == 0) return all;
    std::vector<QClass> out;
    for (auto& q : all)
        if (g.element_order(q.representative) % p != 0) out.push_back(std::move(q));
    return out;
}

std::vector<Elem> generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens) {
    std::vector<bool> in(g.order(), false);
    std::vector<Elem> members{g.identity()};
    in[g.identity()] = true;
    for (std::size_t head = 0; head < members.size(); ++head)
        for (Elem s : gens) {
            Elem y = g.mul(members[head], s);
            if (!in[y]) {
                in[y] = true;
                members.push_back(y);
            }
        }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& elems) {
    if (elems.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (Elem x : elems) {
        if (x >= g.order()) return false;
        in[x] = true;
    }
    for (Elem a : elems)
        for (Elem b : elems)
            if (!in[g.mul(a, g.inv(b))]) return false;
    return true;
}

std::vector<CyclicSubgroup> cyclic_subgroups(const FiniteGroup& g) {
    std::map<std::vector<Elem>, Elem> seen;
    std::vector<CyclicSubgroup> out;
    for (Elem x = 0; x < g.order(); ++x) {
        std::vector<Elem> elems;
        Elem y = g.identity();
        do {
            elems.push_back(y);
            y = g.mul(y, x);
        } while (y != g.identity());
        std::sort(elems.begin(), elems.end());
        if (seen.emplace(elems, x).second) out.push_back({x, std::move(elems)});
    }
    std::sort(out.begin(), out.end(), [](const CyclicSubgroup& a, const CyclicSubgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.generator < b.generator;
    });
    return out;
}

std::string classify_p_subgroup(const FiniteGroup& g, const std::vector<Elem>& sub, std::uint64_t p) {
    require(p == 2 || p == 3, "structural tags exist only for p = 2 and p = 3");
    const std::size_t m = sub.size();
    bool abelian = true;
    for (std::size_t i = 0; i < m && abelian; ++i)
        for (std::size_t j = i + 1; j < m && abelian; ++j)
            abelian = g.mul(sub[i], sub[j]) == g.mul(sub[j], sub[i]);
    if (p == 3) return abelian ? "abelian" : "nonabelian";
    if (m == 1) return "trivial";
    if (m <= 4) return "order_le_4";
    std::size_t involutions = 0, max_order = 1;
    for (Elem x : sub) {
        if (g.element_order(x) == 2) ++involutions;
        max_order = std::max<std::size_t>(max_order, g.element_order(x));
    }
    if (abelian) return (m == 8 && max_order == 8) ? "cyclic_8" : "abelian_other";
    if (max_order == m / 2) {
        if (involutions == 1) return "generalized_quaternion";
        if (involutions == m / 2 + 1) return "dihedral";
        if (m >= 16 && involutions == m / 4 + 1) return "semidihedral";
    }
    return "other";
}

SylowReport sylow_report(const FiniteGroup& g, std::uint64_t p) {
    require(is_prime(p), "sylow_report needs a prime");
    std::size_t target = 1;
    for (int k = valuation(g.order(), p); k > 0; --k) target *= p;
    std::vector<Elem> h{g.identity()};
    std::vector<bool> in(g.order(), false);
    in[g.identity()] = true;
    while (h.size() < target) {
        std::optional<Elem> step;
        for (Elem x = 0; x < g.order() && !step; ++x) {
            if (in[x] || !in[g.pow(x, static_cast<std::int64_t>(p))]) continue;
            bool normalizes = true;
            for (Elem y : h)
                if (!in[g.conjugate(y, x)]) {
                    normalizes = false;
                    break;
                }
            if (normalizes) step = x;
        }
        ensure(step.has_value(), "no p-element in the normalizer of a non-Sylow p-subgroup");
        std::vector<Elem> next;
        Elem power = g.identity();
        for (std::uint64_t i = 0; i < p; ++i) {
            for (Elem y : h) next.push_back(g.mul(y, power));
            power = g.mul(power, *step);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        ensure(next.size() == h.size() * p, "Sylow extension step has the wrong order");
        h = std::move(next);
        for (Elem y : h) in[y] = true;
    }
    SylowReport r{p, h, std::nullopt};
    if (p == 2 || p == 3) r.type_tag = classify_p_subgroup(g, h, p);
    return r;
}

std::vector<std::string> corpus_group_names() {
    std::vector<std::string> out;
    for (const auto& entry : nlohmann::json::parse(kGroupCorpusJson)) out.push_back(entry.at("name").get<std::string>());
    return out;
}

FiniteGroup corpus_group(const std::string& name) {
    for (const auto& entry : nlohmann::json::parse(kGroupCorpusJson))
        if (entry.at("name").get<std::string>() == name) return FiniteGroup::from_json(entry);
    throw DomainError("unknown corpus group: " + name);
}

FiniteGroup cyclic_group(std::size_t n) {
    require(n >= 1, "cyclic group order must be positive");
    if (n == 1) return FiniteGroup::from_permutations("C1", {}, 0);
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
    return FiniteGroup::from_permutations("C" + std::to_string(n), {p}, n);
}

}  // namespace adams
