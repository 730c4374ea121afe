#pragma once

#include <memory>

#include "gct/cyclotomic.hpp"
#include "gct/group.hpp"

namespace gct {

// Exact irreducible character table. Row 0 is the trivial character; rows
// sort by (degree, lexicographic value order); columns follow the class
// numbering of `classes`.
struct CharacterTable {
    GroupPtr group;
    ClassPartition classes;
    std::vector<std::vector<Cyclotomic>> values;  // k x k
    std::vector<long> degrees;

    int rows() const { return static_cast<int>(values.size()); }
    const Cyclotomic& at(int r, int c) const { return values[r][c]; }
    // Value of row r at an arbitrary group element.
    const Cyclotomic& at_element(int r, int x) const { return values[r][classes.class_of[x]]; }
    // Class permutation induced by g |-> g^s.
    std::vector<int> power_map(long s) const { return power_class_map(*group, classes, s); }
};

using TablePtr = std::shared_ptr<const CharacterTable>;

// Structure constants of the class algebra: c_i c_j = sum_k a[i][j][k] c_k.
struct ClassAlgebra {
    int k = 0;
    std::vector<long> a;  // k*k*k, a[(i*k+j)*k+t]
    long at(int i, int j, int t) const { return a[(static_cast<size_t>(i) * k + j) * k + t]; }
};

ClassAlgebra class_constants(const FiniteGroup& G, const ClassPartition& P);

// Smallest prime p = 1 (mod exponent) with p > 2*ceil(sqrt,|G|); large enough
// that degrees and multiplicities lift uniquely from F_p.
long dixon_prime(const FiniteGroup& G);

TablePtr character_table(GroupPtr G, long order_cap = 5000);

// Table of G/M assembled from the rows of T with M inside their kernel;
// re-verified against both orthogonality relations.
TablePtr quotient_table(const CharacterTable& T, const SubgroupSet& M);

SubgroupSet kernel_of(const CharacterTable& T, int row);

// Exact inner product of two rows seen as class functions: delta_rs.
Cyclotomic row_inner_product(const CharacterTable& T, int r, int s);

}  // namespace gct
