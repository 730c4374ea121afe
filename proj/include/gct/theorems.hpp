#pragma once

#include <optional>
#include <string>

#include "gct/clifford.hpp"
#include "gct/structure.hpp"

namespace gct {

// Outcome of a theorem check. NotApplicable means a hypothesis failed and
// the conclusion was never judged; it is distinct from Fails. When an
// independent oracle path also ran, cross_check records its verdict and the
// two must agree (a mismatch throws, it is never resolved silently).
struct Verdict {
    enum class State { Holds, Fails, NotApplicable };
    State state = State::NotApplicable;
    std::string witness;
    std::optional<bool> cross_check;

    bool holds() const { return state == State::Holds; }
};

// Certificate that a character is induced-from-linear in the strong sense:
// H normal in the ambient group, row lambda_row of the standalone table of H
// linear and invariant under ambient conjugation. For a CharacterPair the
// target is a row of the ambient table and Irr(G|lambda) = {chi}; for a
// GCharacterPair the target is a cell index of a GCharTable and
// Irr(G|theta) = Irr(G|lambda).
struct LinearPair {
    enum class Kind { CharacterPair, GCharacterPair };
    SubgroupSet H;
    int lambda_row = -1;
    int target = -1;
    Kind kind = Kind::CharacterPair;
};

// G-classes (by index into TG.classes) consisting of p-elements, read off
// the table alone: x is a p-element iff chi(x)^{|G|_p} == chi(1) mod p for
// every row chi. Checked against element orders before returning.
std::vector<int> p_elements_from_table(const CharacterTable& TG, long p);

// Table-side tests from the p-element classes: a Sylow p-subgroup of N is
// normal iff N contains exactly |N|_p p-elements, and N is solvable iff a
// chain of ambient-normal subgroups with nilpotent factors descends from N
// to 1 (factors judged in quotient tables). Cross-checked structurally.
Verdict nilpotent_from_table(TablePtr TG, const SubgroupSet& N);
Verdict solvable_from_table(TablePtr TG, const SubgroupSet& N);

// Order of det(theta) for row r of TN: per class, the top elementary
// symmetric function of the eigenvalues is recovered from the power sums
// theta(g^s) by Newton's identities; the result is the lcm of the
// multiplicative orders of those determinant values.
long determinant_order(const CharacterTable& TN, int r);

// Character-counting data for N at the prime p, with the ambient action
// taken from gt/cd. S_rows: rows theta of the standalone table of N with
// p not dividing theta(1) nor o(theta); SG_rows: the linear ambient-invariant
// part of S_rows; s_value: sum of theta(1)^2 over S_rows.
// Construction asserts |O^p(N)| == s_value (mod p) and
// |SG_rows| == |N : [G,N] O^{p'}(N)|.
struct SData {
    std::vector<int> S_rows;
    std::vector<int> SG_rows;
    long s_value = 0;
};

SData s_of_n(const GCharTable& gt, const CliffordData& cd, long p);

// Predicate: p divides theta_hat(1) for every non-linear minimal invariant
// character (table side: B_i != 1 implies p | B_i). When it holds, a normal
// p-complement of N is exhibited and verified structurally.
Verdict thompson_check(const GCharTable& gt, const CliffordData& cd, long p);

// Search for a pair certifying row chi_row of TG: normal subgroups ascending
// by order, linear invariant rows in table order, first hit returned.
// Definition path (induction inner products give Irr(G|lambda) = {chi}) and
// table path ([G,H] inside ker chi and the H-diagonal entry equals |G|) are
// evaluated for every candidate and must agree.
std::optional<LinearPair> find_linear_pair(TablePtr TG, int chi_row);
// Every row certified by some pair.
Verdict is_nmi_group(TablePtr TG);

// Every theta in Irr(N) admits a pair (H, lambda) with H normal in G inside
// N and Irr(G|theta) = Irr(G|lambda); the equivalent induced-character form
// lambda^N = m theta_hat is computed independently and compared, and the
// diagonal criterion lambda_i = |H| chi(1)^2 is asserted for every pair.
Verdict is_g_invariant_nmi_subgroup(TablePtr TG, const SubgroupSet& N);

// Taketa-style bound: with the distinct leader degrees f_1 < ... < f_s of N,
// Gamma^{i+1}(N) lies in ker(theta_hat) for every theta of leader degree
// f_i; N is hypercentral with length at most s. NotApplicable unless N is a
// G-invariant nMI-subgroup. The descending series is computed from the
// table ([N,G] via the diagonal criterion, iterated) and structurally.
Verdict taketa_check(TablePtr TG, const SubgroupSet& N);

// For an nMI group: with distinct degrees d_1 < ... < d_n, the (i+1)-th
// lower central term lies in ker chi for every chi of degree d_i, the group
// is nilpotent, and its class is at most n. NotApplicable when not nMI.
Verdict nmi_structure_check(TablePtr TG);

// For hypercentral N: [G,N] lies in Phi(G) and N. When N is not
// hypercentral the verdict is NotApplicable but the witness still records
// whether the containment happens to hold (the converse is false).
Verdict fratt_check(TablePtr TG, const SubgroupSet& N);

}  // namespace gct
