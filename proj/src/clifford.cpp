#include "gct/clifford.hpp"

#include <algorithm>

#include "gct/structure.hpp"

namespace gct {

namespace {

int dsu_find(std::vector<int>& up, int x) {
    while (up[x] != x) {
        up[x] = up[up[x]];
        x = up[x];
    }
    return x;
}

// Exact determinant-nonzero test by Gaussian elimination over the cyclotomic
// field (division by pivots is exact).
bool determinant_nonzero(std::vector<std::vector<Cyclotomic>> M) {
    const int k = static_cast<int>(M.size());
    for (int col = 0; col < k; ++col) {
        int piv = -1;
        for (int r = col; r < k; ++r)
            if (!M[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return false;
        std::swap(M[col], M[piv]);
        Cyclotomic iv = M[col][col].inverse();
        for (int r = col + 1; r < k; ++r) {
            if (M[r][col].is_zero()) continue;
            Cyclotomic f = M[r][col] * iv;
            for (int c = col; c < k; ++c) M[r][c] -= f * M[col][c];
        }
    }
    return true;
}

GCharTable assemble(TablePtr TG, const SubgroupSet& N, std::vector<std::vector<int>> cells,
                    std::vector<int> delta) {
    GCharTable gt;
    gt.ambient = TG;
    gt.N = N;
    gt.g_classes = g_classes(TG->group, N);
    gt.cells = std::move(cells);
    gt.delta = std::move(delta);
    const int k = gt.k();
    if (gt.g_classes.count != k)
        throw VerificationFailed("equivalence cell count " + std::to_string(k) +
                                 " != G-class count " + std::to_string(gt.g_classes.count));

    gt.X.assign(k, std::vector<Cyclotomic>(k));
    gt.D.resize(k);
    for (int j = 0; j < k; ++j) {
        gt.D[j] = gt.g_classes.sizes[j];
        for (int i = 0; i < k; ++i)
            gt.X[i][j] = TG->at_element(gt.delta[i], gt.g_classes.reps[j]);
    }

    gt.lambda_diag.resize(k);
    CycloAccumulator acc(exponent_of(*gt.ambient->group));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            acc.reset();
            for (int c = 0; c < k; ++c)
                acc.add_product_conj(Rational(gt.D[c]), gt.X[i][c], gt.X[j][c]);
            Cyclotomic entry = acc.value();
            if (i != j) {
                if (!entry.is_zero())
                    throw LambdaNotDiagonal("Lambda[" + std::to_string(i) + "][" +
                                            std::to_string(j) + "] is nonzero");
                continue;
            }
            auto v = entry.to_rational_integer();
            if (!v || *v <= 0)
                throw VerificationFailed("Lambda[" + std::to_string(i) + "][" + std::to_string(i) +
                                         "] is not a positive integer");
            gt.lambda_diag[i] = *v;
        }
    if (gt.lambda_diag[0] != N.order())
        throw VerificationFailed("lambda_1 != |N| on the trivial row");
    if (!determinant_nonzero(gt.X)) throw SingularX("det X = 0");
    return gt;
}

}  // namespace

ClassPartition g_classes(GroupPtr G, const SubgroupSet& N) {
    if (!N.is_normal_in_ambient) throw NotNormal("g_classes: subgroup is not normal");
    return conjugation_orbits(*G, N.elems);
}

std::vector<std::vector<int>> equivalence_classes_wrt(const CharacterTable& TG,
                                                      const SubgroupSet& N) {
    if (!N.is_normal_in_ambient)
        throw NotNormal("equivalence_classes_wrt: subgroup is not normal");
    ClassPartition P = conjugation_orbits(*TG.group, N.elems);
    const int rows = TG.rows();
    CycloAccumulator acc(exponent_of(*TG.group));
    std::vector<int> up(rows);
    for (int r = 0; r < rows; ++r) up[r] = r;
    for (int r = 0; r < rows; ++r)
        for (int s = r + 1; s < rows; ++s) {
            if (dsu_find(up, r) == dsu_find(up, s)) continue;
            acc.reset();
            for (int j = 0; j < P.count; ++j)
                acc.add_product_conj(Rational(P.sizes[j]), TG.at_element(r, P.reps[j]),
                                     TG.at_element(s, P.reps[j]));
            if (!acc.value().is_zero()) up[dsu_find(up, r)] = dsu_find(up, s);
        }
    std::vector<std::vector<int>> by_root(rows);
    for (int r = 0; r < rows; ++r) by_root[dsu_find(up, r)].push_back(r);
    std::vector<std::vector<int>> cells;
    for (auto& cell : by_root)
        if (!cell.empty()) cells.push_back(std::move(cell));
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return cells;
}

std::vector<int> choose_delta(const CharacterTable& TG,
                              const std::vector<std::vector<int>>& cells) {
    // Rows are sorted by degree, so the smallest index in a cell is also its
    // smallest (degree, index) member, and cell minima ascending puts the
    // trivial row's cell first.
    std::vector<int> delta;
    delta.reserve(cells.size());
    for (const auto& cell : cells) delta.push_back(*std::min_element(cell.begin(), cell.end()));
    std::sort(delta.begin(), delta.end());
    if (delta.empty() || delta[0] != 0)
        throw VerificationFailed("choose_delta: trivial row missing from the partition");
    (void)TG;
    return delta;
}

GCharTable build_g_char_table(TablePtr TG, const SubgroupSet& N) {
    auto cells = equivalence_classes_wrt(*TG, N);
    auto delta = choose_delta(*TG, cells);
    return assemble(std::move(TG), N, std::move(cells), std::move(delta));
}

GCharTable build_g_char_table_with_delta(TablePtr TG, const SubgroupSet& N,
                                         const std::vector<int>& delta) {
    auto cells = equivalence_classes_wrt(*TG, N);
    if (delta.size() != cells.size())
        throw Error("build_g_char_table_with_delta: need one representative per cell");
    for (size_t i = 0; i < cells.size(); ++i)
        if (!std::binary_search(cells[i].begin(), cells[i].end(), delta[i]))
            throw Error("build_g_char_table_with_delta: representative " +
                        std::to_string(delta[i]) + " is not in cell " + std::to_string(i));
    if (delta[0] != 0)
        throw Error("build_g_char_table_with_delta: the trivial cell must keep row 0");
    return assemble(std::move(TG), N, cells, delta);
}

long relation_A(const GCharTable& gt, int i) {
    long n = gt.N.order();
    if (gt.lambda_diag[i] % n != 0)
        throw NonIntegral("lambda_" + std::to_string(i) + " not divisible by |N|");
    return gt.lambda_diag[i] / n;
}

long relation_B(const GCharTable& gt, int i) {
    long num = gt.N.order() * gt.chi_deg(i) * gt.chi_deg(i);
    if (num % gt.lambda_diag[i] != 0)
        throw NonIntegral("|N| chi_" + std::to_string(i) + "(1)^2 not divisible by lambda");
    return num / gt.lambda_diag[i];
}

CliffordData clifford_oracle(const GCharTable& gt) {
    GroupPtr G = gt.ambient->group;
    auto [H, loc] = subgroup_as_group(G, gt.N);
    CliffordData cd;
    cd.n_table = character_table(H);
    cd.local_to_ambient = loc;
    const CharacterTable& TN = *cd.n_table;
    const int rows = TN.rows();
    const int kn = TN.classes.count;

    std::vector<int> amb2loc(G->n, -1);
    for (int i = 0; i < H->n; ++i) amb2loc[loc[i]] = i;

    // Action of G on Irr(N) through a generating set: theta^g(n) = theta(gng^-1).
    std::vector<std::vector<int>> row_image;
    for (int g : small_generating_set(*G)) {
        std::vector<int> cmap(kn);
        for (int c = 0; c < kn; ++c) {
            int conj = G->mul(G->mul(g, loc[TN.classes.reps[c]]), G->inv(g));
            cmap[c] = TN.classes.class_of[amb2loc[conj]];
        }
        std::vector<int> img(rows, -1);
        for (int r = 0; r < rows; ++r) {
            for (int s = 0; s < rows && img[r] < 0; ++s) {
                if (TN.degrees[s] != TN.degrees[r]) continue;
                bool same = true;
                for (int c = 0; c < kn && same; ++c)
                    if (!(TN.at(s, c) == TN.at(r, cmap[c]))) same = false;
                if (same) img[r] = s;
            }
            if (img[r] < 0)
                throw ActionMismatch("conjugate of an irreducible row is not in the table");
        }
        row_image.push_back(std::move(img));
    }

    std::vector<std::vector<int>> all_orbits;
    std::vector<int> orbit_of(rows, -1);
    for (int r = 0; r < rows; ++r) {
        if (orbit_of[r] >= 0) continue;
        std::vector<int> orbit{r};
        orbit_of[r] = static_cast<int>(all_orbits.size());
        for (size_t head = 0; head < orbit.size(); ++head)
            for (const auto& img : row_image) {
                int y = img[orbit[head]];
                if (orbit_of[y] < 0) {
                    orbit_of[y] = orbit_of[r];
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        all_orbits.push_back(std::move(orbit));
    }
    const int k = gt.k();
    if (static_cast<int>(all_orbits.size()) != k)
        throw VerificationFailed("G-orbit count on Irr(N) != number of cells");

    std::vector<char> orbit_used(all_orbits.size(), 0);
    CycloAccumulator acc(exponent_of(*G));
    for (int i = 0; i < k; ++i) {
        // Restriction multiplicities of the cell representative on Irr(N).
        std::vector<long> mult(rows, 0);
        for (int r = 0; r < rows; ++r) {
            acc.reset();
            for (int c = 0; c < kn; ++c)
                acc.add_product_conj(Rational(TN.classes.sizes[c]),
                                     gt.ambient->at_element(gt.delta[i], loc[TN.classes.reps[c]]),
                                     TN.at(r, c));
            auto m = acc.value().scaled(Rational(1, H->n)).to_rational_integer();
            if (!m || *m < 0) throw VerificationFailed("restriction multiplicity not a nonnegative integer");
            mult[r] = *m;
        }
        std::vector<int> constituents;
        for (int r = 0; r < rows; ++r)
            if (mult[r] != 0) constituents.push_back(r);
        if (constituents.empty()) throw VerificationFailed("restriction has no constituent");
        const std::vector<int>& orbit = all_orbits[orbit_of[constituents[0]]];
        if (constituents != orbit)
            throw VerificationFailed("restriction constituents are not one full G-orbit");
        if (orbit_used[orbit_of[constituents[0]]]++)
            throw VerificationFailed("two cells lie over the same G-orbit");

        long e = mult[orbit[0]], td = TN.degrees[orbit[0]];
        for (int r : orbit) {
            if (mult[r] != e) throw VerificationFailed("unequal multiplicities inside one orbit");
            if (TN.degrees[r] != td) throw VerificationFailed("unequal degrees inside one orbit");
        }
        long t = static_cast<long>(orbit.size());
        if (gt.chi_deg(i) != t * e * td)
            throw VerificationFailed("chi(1) != t e theta(1) on cell " + std::to_string(i));
        if (gt.lambda_diag[i] != gt.N.order() * t * e * e)
            throw PathDisagreement("lambda_" + std::to_string(i) + " != |N| t e^2");

        std::vector<Cyclotomic> hat(kn);
        for (int c = 0; c < kn; ++c) {
            acc.reset();
            for (int r : orbit) acc.add(TN.at(r, c));
            hat[c] = acc.value();
        }

        cd.orbits.push_back(orbit);
        cd.t.push_back(t);
        cd.e.push_back(e);
        cd.theta_deg.push_back(td);
        cd.min_char_deg.push_back(t * td);
        cd.leader_deg.push_back(td * t * td);
        cd.theta_hat.push_back(std::move(hat));
    }
    return cd;
}

SubgroupSet min_char_kernel(const GCharTable& gt, const CliffordData& cd, int i) {
    GroupPtr G = gt.ambient->group;
    std::vector<int> amb2loc(G->n, -1);
    for (size_t j = 0; j < cd.local_to_ambient.size(); ++j) amb2loc[cd.local_to_ambient[j]] = static_cast<int>(j);
    Cyclotomic deg(cd.min_char_deg[i]);
    std::vector<int> ker;
    for (int x : gt.N.elems) {
        int c = cd.n_table->classes.class_of[amb2loc[x]];
        if (cd.theta_hat[i][c] == deg) ker.push_back(x);
    }
    SubgroupSet S = make_subgroup(G, ker);
    if (!S.is_normal_in_ambient)
        throw VerificationFailed("kernel of a G-invariant character is not normal");
    return S;
}

std::vector<int> lin_g(const GCharTable& gt, const CliffordData& cd) {
    std::vector<int> table, oracle;
    for (int i = 0; i < gt.k(); ++i) {
        if (gt.lambda_diag[i] == gt.N.order() * gt.chi_deg(i) * gt.chi_deg(i)) table.push_back(i);
        if (cd.t[i] == 1 && cd.theta_deg[i] == 1) oracle.push_back(i);
    }
    if (table != oracle) throw PathDisagreement("lin_g: table and oracle cells differ");
    return table;
}

namespace {
long radical(long n) {
    long r = 1;
    for (long p : prime_divisors(n)) r *= p;
    return r;
}
}  // namespace

std::vector<long> min_chars(const GCharTable& gt, const CliffordData& cd) {
    std::vector<long> out;
    for (int i = 0; i < gt.k(); ++i) {
        if (radical(relation_B(gt, i)) != radical(cd.min_char_deg[i]))
            throw PathDisagreement("min_chars: rad(B) != rad(theta_hat(1)) on cell " +
                                   std::to_string(i));
        out.push_back(cd.min_char_deg[i]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<long> leader_degs(const GCharTable& gt, const CliffordData& cd) {
    std::vector<long> out;
    for (int i = 0; i < gt.k(); ++i) {
        long b = relation_B(gt, i);
        if (b != cd.leader_deg[i])
            throw PathDisagreement("leader_degs: B != theta(1) theta_hat(1) on cell " +
                                   std::to_string(i));
        out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SubgroupSet commutator_from_table(const GCharTable& gt) {
    GroupPtr G = gt.ambient->group;
    std::vector<int> kept = gt.N.elems;
    for (int i = 0; i < gt.k(); ++i) {
        if (gt.lambda_diag[i] != gt.N.order() * gt.chi_deg(i) * gt.chi_deg(i)) continue;
        Cyclotomic deg(gt.chi_deg(i));
        std::vector<int> next;
        for (int x : kept)
            if (gt.ambient->at_element(gt.delta[i], x) == deg) next.push_back(x);
        kept = std::move(next);
    }
    SubgroupSet table_side = make_subgroup(G, kept);
    SubgroupSet oracle = commutator(G, gt.N, full_subgroup(G));
    if (table_side.elems != oracle.elems)
        throw PathDisagreement("commutator_from_table: table and structural [N,G] differ");
    return table_side;
}

}  // namespace gct
