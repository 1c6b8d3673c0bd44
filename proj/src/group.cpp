#include "halg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace halg {

namespace {

std::string default_elem_name(int i) { return "g" + std::to_string(i); }

std::vector<std::string> fill_names(std::vector<std::string> names, int order) {
    if (names.empty()) {
        names.reserve(size_t(order));
        for (int i = 0; i < order; ++i) names.push_back(default_elem_name(i));
    }
    if (int(names.size()) != order)
        throw ValidationError("group.names", "", "element name list has wrong length");
    return names;
}

}  // namespace

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    int x = a, n = 1;
    while (x != identity) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

int FiniteGroup::exponent() const {
    long long l = 1;
    for (int a = 0; a < order; ++a) l = std::lcm(l, (long long)element_order(a));
    return int(l);
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
    std::vector<std::vector<int>> classes;
    std::vector<bool> seen(size_t(order), false);
    for (int a = 0; a < order; ++a) {
        if (seen[size_t(a)]) continue;
        std::set<int> cls;
        for (int g = 0; g < order; ++g) cls.insert(conj(g, a));
        std::vector<int> v(cls.begin(), cls.end());
        for (int x : v) seen[size_t(x)] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

bool same_table(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order == b.order && a.table == b.table;
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
    if (!same_table(*inner.cod, *outer.dom))
        throw ValidationError("hom.compose", "", "compose: codomain/domain mismatch");
    GroupHom out{inner.dom, outer.cod, {}};
    out.map.reserve(inner.map.size());
    for (int x : inner.map) out.map.push_back(outer.map[size_t(x)]);
    return out;
}

GroupHom identity_hom(const GroupPtr& g) {
    GroupHom f{g, g, std::vector<int>(size_t(g->order))};
    for (int i = 0; i < g->order; ++i) f.map[size_t(i)] = i;
    return f;
}

GroupHom trivial_hom(const GroupPtr& dom, const GroupPtr& cod) {
    return GroupHom{dom, cod, std::vector<int>(size_t(dom->order), cod->identity)};
}

GroupHom make_hom(const GroupPtr& dom, const GroupPtr& cod, std::vector<int> images) {
    if (int(images.size()) != dom->order)
        throw ValidationError("hom.images", "", "make_hom: image list has wrong length");
    for (int x : images)
        if (x < 0 || x >= cod->order)
            throw ValidationError("hom.images", std::to_string(x), "make_hom: image out of range");
    GroupHom f{dom, cod, std::move(images)};
    CheckResult c = hom_check(f);
    if (!c.pass)
        throw ValidationError("hom.multiplicative", c.witnesses.front(),
                              "make_hom: not a homomorphism; " + c.witnesses.front());
    return f;
}

CheckResult hom_check(const GroupHom& f, const std::string& label) {
    CheckResult c("hom.multiplicative" + (label.empty() ? "" : "." + label),
                  "f(a b) = f(a) f(b) and f(e) = e");
    const FiniteGroup& g = *f.dom;
    const FiniteGroup& h = *f.cod;
    if (f(g.identity) != h.identity)
        c.fail("f(e) = " + h.elem(f(g.identity)) + " != e");
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            if (f(g.mul(a, b)) != h.mul(f(a), f(b)))
                c.fail("a=" + g.elem(a) + " b=" + g.elem(b));
    return c;
}

bool is_hom(const GroupHom& f) { return hom_check(f).pass; }

GroupPtr group_from_table(std::string name, std::vector<int> table,
                          std::vector<std::string> element_names) {
    const size_t n2 = table.size();
    int order = 0;
    while (size_t(order) * size_t(order) < n2) ++order;
    if (size_t(order) * size_t(order) != n2 || order == 0)
        throw ValidationError("group.table", "", "table is not a nonempty square");
    auto g = std::make_shared<FiniteGroup>();
    g->name = std::move(name);
    g->order = order;
    g->table = std::move(table);
    g->element_names = fill_names(std::move(element_names), order);

    for (int v : g->table)
        if (v < 0 || v >= order)
            throw ValidationError("group.table", std::to_string(v), "table entry out of range");

    // Latin square
    for (int a = 0; a < order; ++a) {
        std::vector<bool> row(size_t(order), false), col(size_t(order), false);
        for (int b = 0; b < order; ++b) {
            row[size_t(g->mul(a, b))] = true;
            col[size_t(g->mul(b, a))] = true;
        }
        for (int b = 0; b < order; ++b)
            if (!row[size_t(b)] || !col[size_t(b)])
                throw ValidationError("group.latin-square", "row/col " + g->elem(a),
                                      "multiplication table is not a Latin square at " +
                                          g->elem(a));
    }

    // identity
    int e = -1;
    for (int cand = 0; cand < order; ++cand) {
        bool ok = true;
        for (int a = 0; a < order && ok; ++a)
            ok = g->mul(cand, a) == a && g->mul(a, cand) == a;
        if (ok) {
            e = cand;
            break;
        }
    }
    if (e < 0) throw ValidationError("group.identity", "", "no two-sided identity element");
    g->identity = e;

    // inverses
    g->inv.assign(size_t(order), -1);
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            if (g->mul(a, b) == e && g->mul(b, a) == e) {
                g->inv[size_t(a)] = b;
                break;
            }
        }
        if (g->inv[size_t(a)] < 0)
            throw ValidationError("group.inverse", g->elem(a),
                                  "element " + g->elem(a) + " has no two-sided inverse");
    }

    // associativity
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int c = 0; c < order; ++c)
                if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
                    throw ValidationError(
                        "group.associativity",
                        "(" + g->elem(a) + "," + g->elem(b) + "," + g->elem(c) + ")",
                        "associativity fails at (" + g->elem(a) + "," + g->elem(b) + "," +
                            g->elem(c) + ")");

    return g;
}

namespace {

std::vector<int> perm_mul(const std::vector<int>& a, const std::vector<int>& b) {
    // apply b first, then a
    std::vector<int> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[size_t(b[i])];
    return out;
}

std::string perm_name(const std::vector<int>& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

}  // namespace

GroupPtr group_from_permutations(std::string name, int degree,
                                 const std::vector<std::vector<int>>& generators,
                                 int max_order) {
    std::vector<int> id(static_cast<size_t>(degree), 0);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& p : generators) {
        if (int(p.size()) != degree)
            throw ValidationError("group.permutation", perm_name(p),
                                  "generator has wrong degree");
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != id)
            throw ValidationError("group.permutation", perm_name(p),
                                  "generator is not a permutation");
    }

    std::set<std::vector<int>> elems;
    elems.insert(id);
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : frontier) {
            for (const auto& gen : generators) {
                std::vector<int> y = perm_mul(x, gen);
                if (elems.insert(y).second) {
                    if (int(elems.size()) > max_order)
                        throw ValidationError("group.max-order", std::to_string(max_order),
                                              "generated group exceeds the order cap " +
                                                  std::to_string(max_order));
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < sorted.size(); ++i) index[sorted[i]] = int(i);

    int order = int(sorted.size());
    std::vector<int> table(size_t(order) * size_t(order));
    std::vector<std::string> names;
    names.reserve(size_t(order));
    for (int i = 0; i < order; ++i) names.push_back(perm_name(sorted[size_t(i)]));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            table[size_t(a) * size_t(order) + size_t(b)] =
                index.at(perm_mul(sorted[size_t(a)], sorted[size_t(b)]));

    return group_from_table(std::move(name), std::move(table), std::move(names));
}

GroupPtr trivial_group() { return group_from_table("1", {0}, {"e"}); }

GroupPtr cyclic_group(int n) {
    if (n <= 0) throw ValidationError("group.order", std::to_string(n), "order must be positive");
    std::vector<int> table(size_t(n) * size_t(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) names.push_back(std::to_string(a));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[size_t(a) * size_t(n) + size_t(b)] = (a + b) % n;
    return group_from_table("Z" + std::to_string(n), std::move(table), std::move(names));
}

GroupPtr klein_four_group() {
    DirectProduct p = direct_product(cyclic_group(2), cyclic_group(2));
    auto g = std::make_shared<FiniteGroup>(*p.group);
    g->name = "V4";
    return g;
}

GroupPtr symmetric_group(int n, int max_order) {
    if (n < 1) throw ValidationError("group.order", std::to_string(n), "degree must be >= 1");
    if (n == 1) return trivial_group();
    std::vector<int> swap01(static_cast<size_t>(n), 0), cycle(static_cast<size_t>(n), 0);
    std::iota(swap01.begin(), swap01.end(), 0);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cycle[size_t(i)] = (i + 1) % n;
    return group_from_permutations("S" + std::to_string(n), n, {swap01, cycle}, max_order);
}

GroupPtr alternating_group(int n, int max_order) {
    if (n < 3) return trivial_group();
    std::vector<std::vector<int>> gens;
    for (int i = 0; i + 2 < n; ++i) {
        std::vector<int> c(static_cast<size_t>(n), 0);
        std::iota(c.begin(), c.end(), 0);
        c[size_t(i)] = i + 1;
        c[size_t(i + 1)] = i + 2;
        c[size_t(i + 2)] = i;
        gens.push_back(std::move(c));
    }
    return group_from_permutations("A" + std::to_string(n), n, gens, max_order);
}

GroupPtr dihedral_group(int n, int max_order) {
    if (n < 1) throw ValidationError("group.order", std::to_string(n), "n must be >= 1");
    std::vector<int> rot(static_cast<size_t>(n), 0), refl(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        rot[size_t(i)] = (i + 1) % n;
        refl[size_t(i)] = (n - i) % n;
    }
    return group_from_permutations("D" + std::to_string(n), n, {rot, refl}, max_order);
}

GroupPtr quaternion_group() {
    // elements i^s j^t encoded as 2 s + t, with i^4 = e, j^2 = i^2, j i = i^-1 j
    auto enc = [](int s, int t) { return 2 * ((s % 4 + 4) % 4) + t; };
    std::vector<int> table(64);
    for (int s1 = 0; s1 < 4; ++s1)
        for (int t1 = 0; t1 < 2; ++t1)
            for (int s2 = 0; s2 < 4; ++s2)
                for (int t2 = 0; t2 < 2; ++t2) {
                    int a = enc(s1, t1), b = enc(s2, t2), c;
                    if (t1 == 0)
                        c = enc(s1 + s2, t2);
                    else if (t2 == 0)
                        c = enc(s1 - s2, 1);
                    else
                        c = enc(s1 - s2 + 2, 0);
                    table[size_t(a) * 8 + size_t(b)] = c;
                }
    std::vector<std::string> names{"1", "j", "i", "ij", "i2", "i2j", "i3", "i3j"};
    return group_from_table("Q8", std::move(table), std::move(names));
}

DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b) {
    int n = a->order * b->order;
    std::vector<int> table(size_t(n) * size_t(n));
    std::vector<std::string> names;
    names.reserve(size_t(n));
    for (int i = 0; i < a->order; ++i)
        for (int j = 0; j < b->order; ++j) names.push_back("(" + a->elem(i) + "," + b->elem(j) + ")");
    for (int i1 = 0; i1 < a->order; ++i1)
        for (int j1 = 0; j1 < b->order; ++j1)
            for (int i2 = 0; i2 < a->order; ++i2)
                for (int j2 = 0; j2 < b->order; ++j2) {
                    int x = i1 * b->order + j1, y = i2 * b->order + j2;
                    table[size_t(x) * size_t(n) + size_t(y)] =
                        a->mul(i1, i2) * b->order + b->mul(j1, j2);
                }
    GroupPtr g = group_from_table(a->name + "x" + b->name, std::move(table), std::move(names));
    GroupHom p1{g, a, {}}, p2{g, b, {}};
    for (int i = 0; i < a->order; ++i)
        for (int j = 0; j < b->order; ++j) {
            p1.map.push_back(i);
            p2.map.push_back(j);
        }
    return DirectProduct{g, std::move(p1), std::move(p2)};
}

Subgroup subgroup_from_elements(const GroupPtr& g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::map<int, int> index;
    for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = int(i);
    int n = int(elements.size());
    if (index.find(g->identity) == index.end())
        throw ValidationError("subgroup.identity", "", "subset does not contain the identity");
    std::vector<int> table(size_t(n) * size_t(n));
    std::vector<std::string> names;
    for (int x : elements) names.push_back(g->elem(x));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int prod = g->mul(elements[size_t(i)], elements[size_t(j)]);
            auto it = index.find(prod);
            if (it == index.end())
                throw ValidationError("subgroup.closure",
                                      g->elem(elements[size_t(i)]) + "*" +
                                          g->elem(elements[size_t(j)]),
                                      "subset is not closed under multiplication");
            table[size_t(i) * size_t(n) + size_t(j)] = it->second;
        }
    GroupPtr sub = group_from_table(g->name + "-sub" + std::to_string(n), std::move(table),
                                    std::move(names));
    GroupHom inc{sub, g, elements};
    return Subgroup{sub, std::move(inc)};
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& generators) {
    std::set<int> elems{g->identity};
    std::vector<int> frontier{g->identity};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (int gen : generators) {
                int y = g->mul(x, gen);
                if (elems.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return subgroup_from_elements(g, std::vector<int>(elems.begin(), elems.end()));
}

Subgroup kernel_subgroup(const GroupHom& f) {
    std::vector<int> elems;
    for (int a = 0; a < f.dom->order; ++a)
        if (f(a) == f.cod->identity) elems.push_back(a);
    return subgroup_from_elements(f.dom, std::move(elems));
}

GroupPullback pullback(const GroupHom& s, const GroupHom& t) {
    if (!same_table(*s.cod, *t.cod))
        throw ValidationError("pullback.cospan", "", "pullback: codomains differ");
    const FiniteGroup& g = *s.dom;
    const FiniteGroup& h = *t.dom;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < h.order; ++b)
            if (s(a) == t(b)) pairs.emplace_back(a, b);
    int n = int(pairs.size());
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < n; ++i) index[pairs[size_t(i)]] = i;
    std::vector<int> table(size_t(n) * size_t(n));
    std::vector<std::string> names;
    for (auto& [a, b] : pairs) names.push_back("(" + g.elem(a) + "," + h.elem(b) + ")");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto [a1, b1] = pairs[size_t(i)];
            auto [a2, b2] = pairs[size_t(j)];
            table[size_t(i) * size_t(n) + size_t(j)] = index.at({g.mul(a1, a2), h.mul(b1, b2)});
        }
    GroupPtr p = group_from_table(g.name + "x_" + s.cod->name + "_" + h.name, std::move(table),
                                  std::move(names));
    GroupHom p1{p, s.dom, {}}, p2{p, t.dom, {}};
    for (auto& [a, b] : pairs) {
        p1.map.push_back(a);
        p2.map.push_back(b);
    }
    return GroupPullback{p, std::move(p1), std::move(p2), std::move(pairs)};
}

PullbackMediating mediate_pullback(const GroupPullback& pb, const GroupHom& s,
                                   const GroupHom& t, const GroupHom& f1, const GroupHom& f2) {
    if (!same_table(*f1.dom, *f2.dom))
        throw ValidationError("pullback.cone", "", "cone legs have different domains");
    for (int d = 0; d < f1.dom->order; ++d)
        if (s(f1(d)) != t(f2(d)))
            throw ValidationError("pullback.cone", f1.dom->elem(d),
                                  "cone does not commute at " + f1.dom->elem(d));
    PullbackMediating out;
    out.mediating = GroupHom{f1.dom, pb.group, std::vector<int>(size_t(f1.dom->order), -1)};
    out.candidates_per_element.assign(size_t(f1.dom->order), 0);
    for (int d = 0; d < f1.dom->order; ++d) {
        for (int i = 0; i < pb.group->order; ++i) {
            if (pb.p1(i) == f1(d) && pb.p2(i) == f2(d)) {
                ++out.candidates_per_element[size_t(d)];
                out.mediating.map[size_t(d)] = i;
            }
        }
        if (out.candidates_per_element[size_t(d)] != 1)
            throw ValidationError("pullback.universal", f1.dom->elem(d),
                                  "mediating image not unique at " + f1.dom->elem(d));
    }
    return out;
}

Subgroup equalizer_subgroup(const GroupHom& f1, const GroupHom& f2) {
    if (!same_table(*f1.dom, *f2.dom) || !same_table(*f1.cod, *f2.cod))
        throw ValidationError("equalizer.parallel", "", "equalizer needs a parallel pair");
    std::vector<int> elems;
    for (int a = 0; a < f1.dom->order; ++a)
        if (f1(a) == f2(a)) elems.push_back(a);
    return subgroup_from_elements(f1.dom, std::move(elems));
}

AutGroup aut_group(const GroupPtr& h, int max_base_order) {
    if (h->order > max_base_order)
        throw ValidationError("aut.max-order", std::to_string(h->order),
                              "automorphism search capped at base order " +
                                  std::to_string(max_base_order));
    std::vector<int> rest;
    for (int i = 0; i < h->order; ++i)
        if (i != h->identity) rest.push_back(i);

    std::vector<std::vector<int>> autos;
    std::vector<int> perm = rest;
    do {
        std::vector<int> cand(size_t(h->order));
        cand[size_t(h->identity)] = h->identity;
        for (size_t i = 0; i < rest.size(); ++i) cand[size_t(rest[i])] = perm[i];
        bool ok = true;
        for (int a = 0; a < h->order && ok; ++a)
            for (int b = 0; b < h->order && ok; ++b)
                ok = cand[size_t(h->mul(a, b))] == h->mul(cand[size_t(a)], cand[size_t(b)]);
        if (ok) autos.push_back(std::move(cand));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(autos.begin(), autos.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < autos.size(); ++i) index[autos[i]] = int(i);
    int n = int(autos.size());
    std::vector<int> table(size_t(n) * size_t(n));
    std::vector<std::string> names;
    for (const auto& a : autos) {
        std::string s = "[";
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(a[i]);
        }
        names.push_back(s + "]");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> comp(size_t(h->order));
            for (int x = 0; x < h->order; ++x)
                comp[size_t(x)] = autos[size_t(a)][size_t(autos[size_t(b)][size_t(x)])];
            table[size_t(a) * size_t(n) + size_t(b)] = index.at(comp);
        }
    GroupPtr g = group_from_table("Aut(" + h->name + ")", std::move(table), std::move(names));
    return AutGroup{g, std::move(autos)};
}

}  // namespace halg
