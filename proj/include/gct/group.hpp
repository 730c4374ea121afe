#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gct/errors.hpp"

namespace gct {

// Finite group materialized as a full Cayley table. Element 0 is the
// identity. Immutable after construction; shared freely.
struct FiniteGroup {
    int n = 0;
    std::vector<int> mul_table;    // n*n, row-major
    std::vector<int> inverses;
    std::vector<int> elem_orders;
    std::string name;

    int mul(int a, int b) const { return mul_table[static_cast<size_t>(a) * n + b]; }
    int inv(int a) const { return inverses[a]; }
    int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
    int order() const { return n; }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;
using Permutation = std::vector<int>;  // images of 0..m-1

struct ClassPartition {
    std::vector<int> class_of;  // length: number of ambient elements (-1 off-domain)
    std::vector<int> reps;      // smallest element of each class
    std::vector<long> sizes;
    int count = 0;
};

struct SubgroupSet {
    GroupPtr ambient;
    std::vector<int> elems;  // sorted, contains 0
    bool is_normal_in_ambient = false;

    long order() const { return static_cast<long>(elems.size()); }
    bool contains(int x) const;
};

struct GSeries {
    std::vector<SubgroupSet> terms;  // distinct terms; last entry is the stable tail
    bool ascending = false;
};

GroupPtr from_cayley(const std::vector<std::vector<int>>& table, const std::string& name);
GroupPtr from_permutations(const std::vector<Permutation>& gens, const std::string& name,
                           long order_cap = 5000);

ClassPartition conjugacy_classes(const FiniteGroup& G);
// Orbits of `domain` under conjugation by all of G; class 0 contains the
// identity, then ascending by (size, smallest member).
ClassPartition conjugation_orbits(const FiniteGroup& G, const std::vector<int>& domain);
// c |-> class of rep(c)^s; independent of the representative choice.
std::vector<int> power_class_map(const FiniteGroup& G, const ClassPartition& P, long s);

int element_power(const FiniteGroup& G, int x, long s);
long exponent_of(const FiniteGroup& G);

std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);

// Greedy generating set of the subgroup carried by elems (the whole group
// when elems is empty): adjoin the smallest member outside the closure.
std::vector<int> small_generating_set(const FiniteGroup& G,
                                      const std::vector<int>& elems = {});

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems);
bool is_normal_set(const FiniteGroup& G, const std::vector<int>& elems);
SubgroupSet make_subgroup(GroupPtr G, std::vector<int> elems);
SubgroupSet trivial_subgroup(GroupPtr G);
SubgroupSet full_subgroup(GroupPtr G);

// Complete list of normal subgroups: join-closure of class normal closures,
// sorted by (order, element set). Equivalent to filtering class-unions for
// closure, but stays polynomial in the number of normal subgroups.
std::vector<SubgroupSet> normal_subgroups(GroupPtr G);

SubgroupSet commutator(GroupPtr G, const SubgroupSet& A, const SubgroupSet& B);
SubgroupSet center(GroupPtr G);

GSeries lower_central_g_series(GroupPtr G, const SubgroupSet& N);
GSeries upper_central_g_series(GroupPtr G, const SubgroupSet& N);
// Least k with the descending series hitting 1; empty when it stalls above 1.
// Also recomputes the ascending series and checks both lengths agree.
std::optional<int> hypercentral_g_length(GroupPtr G, const SubgroupSet& N);

// Coset group with deterministic numbering (cosets ordered by smallest
// member); second return maps ambient element -> coset index.
std::pair<GroupPtr, std::vector<int>> quotient(GroupPtr G, const SubgroupSet& M);

// N re-indexed as a standalone group; second return maps local -> ambient.
std::pair<GroupPtr, std::vector<int>> subgroup_as_group(GroupPtr G, const SubgroupSet& N);

}  // namespace gct
