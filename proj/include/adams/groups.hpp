#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace adams {

using Elem = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;  // image of each point, points 0..d-1

inline constexpr std::size_t kMaxGroupOrder = 10000;

struct ConjClass {
    Elem representative;
    std::vector<Elem> members;
};

struct QClass {
    Elem representative;
    std::vector<Elem> members;
    std::vector<std::size_t> conj_classes;  // indices into conjugacy_classes()
};

// Elements are indices 0..order-1. Product is composition: (g*h)(x) = g(h(x)) for
// permutation groups.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::string name, const std::vector<std::vector<std::int64_t>>& table);
    static FiniteGroup from_permutations(std::string name, std::vector<Permutation> gens, std::size_t degree);
    // Cycle notation over arbitrary non-negative point labels.
    static FiniteGroup from_cycles(std::string name, const std::vector<std::vector<std::vector<std::int64_t>>>& gens);
    static FiniteGroup from_json(const nlohmann::json& j);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    const std::string& name() const { return name_; }
    std::size_t order() const { return order_; }
    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem pow(Elem g, std::int64_t k) const;
    Elem conjugate(Elem g, Elem by) const { return mul(mul(by, g), inv(by)); }
    std::uint32_t element_order(Elem g) const { return element_order_[g]; }
    std::uint64_t exponent() const { return exponent_; }
    bool is_abelian() const;
    const std::vector<Elem>& generators() const { return generators_; }

    // Present when constructed from permutations.
    const std::vector<Permutation>& permutations() const { return perms_; }
    std::size_t degree() const { return degree_; }
    const Permutation& element_permutation(Elem a) const;

    const std::vector<ConjClass>& conjugacy_classes() const { return classes_; }
    std::size_t class_of(Elem g) const { return class_of_[g]; }
    std::size_t identity_class() const { return class_of_[identity_]; }
    std::size_t centralizer_order(Elem g) const { return order_ / classes_[class_of_[g]].members.size(); }
    // Class of rep^n for each class.
    std::vector<std::size_t> power_map(std::int64_t n) const;
    std::size_t inverse_class(std::size_t c) const { return class_of_[inv(classes_[c].representative)]; }

    // Content hash of the multiplication table; used as a cache key.
    const std::string& hash() const { return hash_; }
    nlohmann::json to_json() const;

private:
    FiniteGroup() = default;
    void finish();
    void verify_associative() const;
    void compute_classes();
    Elem lookup(const Permutation& p) const;

    std::string name_;
    std::size_t order_ = 0;
    Elem identity_ = 0;
    std::vector<std::uint16_t> table_;  // order*order entries; empty in permutation mode
    std::vector<Permutation> elem_perms_;
    std::unordered_map<std::string, Elem> perm_index_;
    std::vector<std::int64_t> point_labels_;
    std::vector<Elem> inverse_;
    std::vector<std::uint32_t> element_order_;
    std::uint64_t exponent_ = 1;
    std::vector<Elem> generators_;
    std::vector<Permutation> perms_;
    std::size_t degree_ = 0;
    bool from_perms_ = false;
    std::vector<ConjClass> classes_;
    std::vector<std::size_t> class_of_;
    std::string hash_;
};

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g);
std::vector<QClass> q_classes(const FiniteGroup& g);
// p = 0 returns all Q-classes.
std::vector<QClass> p_regular_qclasses(const FiniteGroup& g, std::uint64_t p);

// Sorted element list of the subgroup generated by gens.
std::vector<Elem> generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<Elem>& elems);

struct CyclicSubgroup {
    Elem generator;  // least element index generating it
    std::vector<Elem> elements;
};
std::vector<CyclicSubgroup> cyclic_subgroups(const FiniteGroup& g);

struct SylowReport {
    std::uint64_t prime;
    std::vector<Elem> subgroup;
    std::optional<std::string> type_tag;  // set for p = 2 and p = 3
};
SylowReport sylow_report(const FiniteGroup& g, std::uint64_t p);
// Tag of a 2-group or 3-group given as a subgroup.
std::string classify_p_subgroup(const FiniteGroup& g, const std::vector<Elem>& subgroup, std::uint64_t p);

// Bundled corpus.
std::vector<std::string> corpus_group_names();
FiniteGroup corpus_group(const std::string& name);
FiniteGroup cyclic_group(std::size_t n);

}  // namespace adams
