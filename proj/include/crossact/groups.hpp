#pragma once

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

namespace crossact {

using Elem = int;

// Finite group as a multiplication table. Copies share the immutable table.
class FiniteGroup {
public:
    FiniteGroup();  // trivial group

    // Validates: Latin square, identity, inverses, associativity.
    static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table,
                                  std::vector<std::string> labels = {});

    int order() const { return d_->n; }
    Elem identity() const { return d_->e; }
    Elem mul(Elem a, Elem b) const { return d_->table[static_cast<std::size_t>(a) * d_->n + b]; }
    Elem inv(Elem a) const { return d_->inverse[a]; }
    Elem pow(Elem a, long k) const;
    int element_order(Elem a) const;
    int exponent() const;
    bool is_abelian() const;
    const std::string& label(Elem a) const { return d_->labels[a]; }
    const std::vector<std::string>& labels() const { return d_->labels; }
    std::vector<std::vector<Elem>> table() const;
    // Greedy generating set: elements not in the span of earlier picks.
    const std::vector<Elem>& generators() const { return d_->gens; }
    Elem find_label(const std::string& l) const;  // -1 if absent

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);
    friend bool operator!=(const FiniteGroup& a, const FiniteGroup& b) { return !(a == b); }

private:
    struct Data {
        int n = 1;
        Elem e = 0;
        std::vector<Elem> table{0};
        std::vector<Elem> inverse{0};
        std::vector<std::string> labels{"e"};
        std::vector<Elem> gens;
    };
    std::shared_ptr<const Data> d_;
};

struct GroupHom {
    FiniteGroup domain;
    FiniteGroup codomain;
    std::vector<Elem> map;
    Elem operator()(Elem x) const { return map[x]; }
    bool is_trivial() const;
};

struct Subgroup {
    FiniteGroup parent;
    std::vector<Elem> elements;  // sorted
    int order() const { return static_cast<int>(elements.size()); }
    bool contains(Elem x) const;
    // The subgroup as a group on indices 0..k-1, in sorted order of parent indices.
    FiniteGroup as_group() const;
    Elem index_of(Elem x) const;  // position in elements, -1 if absent
};

FiniteGroup group_from_table(const std::vector<std::vector<Elem>>& table, std::vector<std::string> labels = {});
FiniteGroup group_cyclic(int n);
// Permutations of 1..n in lexicographic order; (fg)(x) = f(g(x)).
FiniteGroup group_symmetric(int n);
FiniteGroup group_product(const FiniteGroup& a, const FiniteGroup& b);
// G x Gamma with (g,s)(h,t) = (gh, (s<h)t), < a right action of G on Gamma by automorphisms.
// Element (g,s) has index g*|Gamma| + s.
FiniteGroup group_semidirect(const FiniteGroup& G, const FiniteGroup& Gamma,
                             const std::vector<std::vector<Elem>>& right_action);

GroupHom hom_validate(const FiniteGroup& domain, const FiniteGroup& codomain, const std::vector<Elem>& map);
GroupHom trivial_hom(const FiniteGroup& domain, const FiniteGroup& codomain);
std::vector<GroupHom> enumerate_homs(const FiniteGroup& domain, const FiniteGroup& codomain,
                                     long bound = 1000000);

Subgroup subgroup_generated(const FiniteGroup& G, const std::vector<Elem>& gens);
Subgroup subgroup_from_elements(const FiniteGroup& G, std::vector<Elem> elements);

// Permutation (images of 1..n, 1-based) to its index in group_symmetric(n).
Elem permutation_index(const std::vector<int>& images);
std::vector<int> permutation_of(int n, Elem index);
// Parses cycle notation like "(1 2 3)(4 5)" or "(123)" for n <= 9.
std::vector<int> parse_cycles(int n, const std::string& text);

nlohmann::json group_to_json(const FiniteGroup& G);
FiniteGroup group_from_json(const nlohmann::json& j);

}  // namespace crossact
