#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "halg/check.hpp"

namespace halg {

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<int> table;  // row-major: table[a * order + b] = a * b
    std::vector<int> inv;
    int identity = 0;
    std::vector<std::string> element_names;

    int mul(int a, int b) const { return table[size_t(a) * size_t(order) + size_t(b)]; }
    int inverse(int a) const { return inv[size_t(a)]; }
    int conj(int g, int h) const { return mul(mul(g, h), inverse(g)); }  // g h g^-1
    const std::string& elem(int a) const { return element_names[size_t(a)]; }

    bool is_abelian() const;
    int element_order(int a) const;
    int exponent() const;  // lcm of element orders
    std::vector<std::vector<int>> conjugacy_classes() const;
};

bool same_table(const FiniteGroup& a, const FiniteGroup& b);

struct GroupHom {
    GroupPtr dom, cod;
    std::vector<int> map;

    int operator()(int a) const { return map[size_t(a)]; }
};

// Composition in application order: compose(outer, inner)(x) = outer(inner(x)).
GroupHom compose(const GroupHom& outer, const GroupHom& inner);
GroupHom identity_hom(const GroupPtr& g);
GroupHom trivial_hom(const GroupPtr& dom, const GroupPtr& cod);
GroupHom make_hom(const GroupPtr& dom, const GroupPtr& cod, std::vector<int> images);

CheckResult hom_check(const GroupHom& f, const std::string& label = "");
bool is_hom(const GroupHom& f);

// Builders. Every builder validates the group axioms and throws
// ValidationError naming the failed axiom and a witness.
GroupPtr group_from_table(std::string name, std::vector<int> table,
                          std::vector<std::string> element_names = {});
GroupPtr group_from_permutations(std::string name, int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 int max_order = 200);

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr klein_four_group();
GroupPtr symmetric_group(int n, int max_order = 200);
GroupPtr alternating_group(int n, int max_order = 200);
GroupPtr dihedral_group(int n, int max_order = 200);  // order 2n
GroupPtr quaternion_group();

struct DirectProduct {
    GroupPtr group;  // pair (a, b) at index a * |B| + b
    GroupHom p1, p2;
};
DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b);

// A subgroup materialized as a fresh group together with its inclusion.
// Elements keep the ambient order (ascending indices).
struct Subgroup {
    GroupPtr group;
    GroupHom inclusion;
};
Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<int> elements);
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& generators);
Subgroup kernel_subgroup(const GroupHom& f);

struct GroupPullback {
    GroupPtr group;  // pairs (g, h) with s(g) = t(h), ordered lexicographically
    GroupHom p1, p2;
    std::vector<std::pair<int, int>> pairs;
};
GroupPullback pullback(const GroupHom& s, const GroupHom& t);

// Mediating morphism into a pullback from a cone (f1, f2); throws unless
// s o f1 = t o f2. `candidates_per_element` reports how many pullback
// elements matched each cone value (exactly one when the universal property
// holds).
struct PullbackMediating {
    GroupHom mediating;
    std::vector<int> candidates_per_element;
};
PullbackMediating mediate_pullback(const GroupPullback& pb, const GroupHom& s,
                                   const GroupHom& t, const GroupHom& f1, const GroupHom& f2);

Subgroup equalizer_subgroup(const GroupHom& f1, const GroupHom& f2);

// Full automorphism group by exhaustive search over bijections fixing the
// identity. `autos[i]` is the image table of the i-th automorphism; the group
// multiplication is composition in application order (a * b applies b first).
struct AutGroup {
    GroupPtr group;
    std::vector<std::vector<int>> autos;
};
AutGroup aut_group(const GroupPtr& h, int max_base_order = 8);

}  // namespace halg
