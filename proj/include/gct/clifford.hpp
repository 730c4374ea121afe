#pragma once

#include "gct/chartab.hpp"

namespace gct {

// G-conjugacy classes of a normal subgroup N: orbits of N under conjugation
// by all of G. Fuses several N-classes in general.
ClassPartition g_classes(GroupPtr G, const SubgroupSet& N);

// Partition of the rows of TG: two rows are equivalent with respect to N when
// their restrictions to N share an irreducible constituent (exact inner
// products; the relation is already transitive by Clifford theory, but the
// implementation closes transitively anyway). Cells sorted by smallest row.
std::vector<std::vector<int>> equivalence_classes_wrt(const CharacterTable& TG,
                                                      const SubgroupSet& N);

// One representative per cell: the row with smallest (degree, index). The
// trivial row's cell comes first; with cells sorted by smallest member and
// rows sorted by degree, that is simply the cell minima in ascending order.
std::vector<int> choose_delta(const CharacterTable& TG,
                              const std::vector<std::vector<int>>& cells);

// The G-character table of N built from a representative system Delta:
// X[i][j] = chi_i(n_j) on G-class representatives n_j, D the G-class sizes,
// and Lambda = X D X-bar-transpose, which the construction verifies to be
// diagonal with positive integer entries and lambda_1 = |N|.
struct GCharTable {
    TablePtr ambient;
    SubgroupSet N;
    ClassPartition g_classes;                // indexed by ambient elements
    std::vector<std::vector<int>> cells;     // row partition, aligned with delta
    std::vector<int> delta;                  // representative row per cell
    std::vector<std::vector<Cyclotomic>> X;  // k x k
    std::vector<long> D;                     // |n_j^G|
    std::vector<long> lambda_diag;

    int k() const { return static_cast<int>(delta.size()); }
    long chi_deg(int i) const { return ambient->degrees[delta[i]]; }
};

GCharTable build_g_char_table(TablePtr TG, const SubgroupSet& N);
// Same construction from caller-chosen representatives (one row per cell).
// The trivial row's cell must keep row 0: the table fixes chi_1 = 1_G.
GCharTable build_g_char_table_with_delta(TablePtr TG, const SubgroupSet& N,
                                         const std::vector<int>& delta);

// Integer relations of row i: A = lambda_i / |N| (= e_i^2 t_i) and
// B = |N| chi_i(1)^2 / lambda_i (= t_i theta_i(1)^2). Non-exact division
// would contradict the construction and throws NonIntegral.
long relation_A(const GCharTable& gt, int i);
long relation_B(const GCharTable& gt, int i);

// Element-level Clifford data, computed from an independently built character
// table of N and the conjugation action of G on Irr(N), aligned to the cells
// of a GCharTable.
struct CliffordData {
    TablePtr n_table;                      // N as a standalone group
    std::vector<int> local_to_ambient;     // element map of n_table's group
    std::vector<std::vector<int>> orbits;  // G-orbit of theta_i, rows of n_table
    std::vector<long> t;                   // |G : I_G(theta_i)| = orbit size
    std::vector<long> e;                   // [(chi_i)_N, theta_i]
    std::vector<long> theta_deg;           // theta_i(1)
    std::vector<long> min_char_deg;        // theta_hat_i(1) = t_i theta_i(1)
    std::vector<long> leader_deg;          // theta_i(1) theta_hat_i(1)
    // theta_hat_i (sum of the orbit) on the classes of n_table.
    std::vector<std::vector<Cyclotomic>> theta_hat;
};

CliffordData clifford_oracle(const GCharTable& gt);

// ker(theta_hat_i) as a subgroup of the ambient group.
SubgroupSet min_char_kernel(const GCharTable& gt, const CliffordData& cd, int i);

// Cells lying over a linear G-invariant character: table test
// lambda_i = |N| chi_i(1)^2 against oracle test t_i = theta_i(1) = 1.
std::vector<int> lin_g(const GCharTable& gt, const CliffordData& cd);
// Mcd: distinct minimal G-invariant character degrees. Oracle-valued; the
// table determines only rad(theta_hat(1)) = rad(B_i), which is cross-checked.
std::vector<long> min_chars(const GCharTable& gt, const CliffordData& cd);
// Lcd: distinct leader degrees; table path B_i against oracle per cell.
std::vector<long> leader_degs(const GCharTable& gt, const CliffordData& cd);

// Intersection of ker(chi) ∩ N over the delta rows detected linear by the
// table test alone; verified equal to the structural [N, G].
SubgroupSet commutator_from_table(const GCharTable& gt);

}  // namespace gct
