#pragma once

#include <optional>

#include "gct/group.hpp"

namespace gct {

// Element-level ground truth the table-side criteria are checked against.
struct StructuralOracles {
    SubgroupSet o_p;             // smallest normal subgroup of N with p-group quotient
    SubgroupSet o_p_prime;       // smallest normal subgroup of N with p'-group quotient
    bool has_normal_p_complement = false;
    std::optional<SubgroupSet> p_complement;
    SubgroupSet frattini;        // Frattini subgroup of the AMBIENT group
    bool is_nilpotent = false;   // N as an abstract group
    int nilpotency_class = -1;   // -1 when not nilpotent
    bool is_solvable = false;
    long sylow_p_order = 1;      // |N|_p
};

long p_part(long m, long p);
bool is_p_element(const FiniteGroup& G, int x, long p);

std::vector<SubgroupSet> all_subgroups(GroupPtr G);
std::vector<SubgroupSet> maximal_subgroups(GroupPtr G);
SubgroupSet frattini_subgroup(GroupPtr G);

bool is_nilpotent_group(GroupPtr G, const SubgroupSet& N);
int nilpotency_class_of(GroupPtr G, const SubgroupSet& N);  // -1 if not nilpotent
bool is_solvable_group(GroupPtr G, const SubgroupSet& N);
SubgroupSet sylow_subgroup(GroupPtr G, const SubgroupSet& N, long p);

// O^p(N): generated by the p'-elements of N. O^{p'}(N): generated by the
// p-elements.
SubgroupSet o_p_subgroup(GroupPtr G, const SubgroupSet& N, long p);
SubgroupSet o_p_prime_subgroup(GroupPtr G, const SubgroupSet& N, long p);

StructuralOracles structural_oracles(GroupPtr G, const SubgroupSet& N, long p);

std::vector<long> prime_divisors(long m);

}  // namespace gct
