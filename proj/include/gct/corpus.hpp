#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gct/group.hpp"

namespace gct {

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
GroupPtr klein_four();
// Dihedral group of the given ORDER (even, >= 4).
GroupPtr dihedral_group(int order);
// Dicyclic group of the given ORDER (divisible by 4): <a,b | a^(2m)=1,
// b^2=a^m, b^-1 a b = a^-1> with order 4m. Order 8 gives Q8, 16 gives Q16.
GroupPtr dicyclic_group(int order);
GroupPtr symmetric_3();
GroupPtr symmetric_4();
GroupPtr alternating_4();
GroupPtr sl_2_3();
// Holomorph of C8: C8 x| Aut(C8), order 32, eleven conjugacy classes.
GroupPtr holomorph_c8();
// Q8 x| C4 where the C4 generator rotates i -> j -> -i; order 32,
// fourteen conjugacy classes, nilpotency class 3, two character degrees.
GroupPtr q8_twisted_c4();

struct CorpusEntry {
    std::string name;                      // matches fixtures/<name>.grp
    std::function<GroupPtr()> build;
    std::string catalog;                   // external catalog id, may be empty
};

const std::vector<CorpusEntry>& corpus();
GroupPtr corpus_group(const std::string& name);

}  // namespace gct
