#include "gct/chartab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace gct {

namespace {

// Finished tables keyed by the exact multiplication table. The build is
// deterministic in the table alone, so a hit is the same mathematical object;
// it is copied and rebound to the caller's group so identity checks hold.
std::mutex built_tables_mu;
std::map<std::vector<int>, std::shared_ptr<CharacterTable>>& built_tables() {
    static auto* m = new std::map<std::vector<int>, std::shared_ptr<CharacterTable>>();
    return *m;
}

struct Fp {
    long p;
    long add(long a, long b) const { return (a + b) % p; }
    long sub(long a, long b) const { return ((a - b) % p + p) % p; }
    long mul(long a, long b) const { return (a * b) % p; }
    long pw(long a, long e) const {
        long r = 1 % p;
        a %= p;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    long inv(long a) const { return pw(((a % p) + p) % p, p - 2); }
};

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(Mat& M, const Fp& F) {
    std::vector<int> pivots;
    if (M.empty()) return pivots;
    const int rows = static_cast<int>(M.size());
    const int cols = static_cast<int>(M[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (M[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[r], M[piv]);
        long iv = F.inv(M[r][c]);
        for (int j = c; j < cols; ++j) M[r][j] = F.mul(M[r][j], iv);
        for (int i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            long f = M[i][c];
            for (int j = c; j < cols; ++j) M[i][j] = F.sub(M[i][j], F.mul(f, M[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    M.resize(pivots.size());
    return pivots;
}

// Basis of the nullspace of M (rows are vectors of length cols).
Mat nullspace(Mat M, const Fp& F) {
    const int cols = M.empty() ? 0 : static_cast<int>(M[0].size());
    std::vector<int> pivots = rref(M, F);
    std::vector<char> is_pivot(cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    Mat basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        Vec v(cols, 0);
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.sub(0, M[r][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Coordinates of y in the row space of `basis` (pre: consistent).
Vec solve_in_basis(const Mat& basis, const Vec& y, const Fp& F) {
    const int d = static_cast<int>(basis.size());
    const int n = static_cast<int>(y.size());
    Mat aug(n, Vec(d + 1, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < d; ++j) aug[i][j] = basis[j][i];
        aug[i][d] = y[i];
    }
    std::vector<int> pivots = rref(aug, F);
    Vec x(d, 0);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == d) throw VerificationFailed("solve_in_basis: inconsistent system");
        x[pivots[r]] = aug[r][d];
    }
    return x;
}

long isqrt_ceil(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r < n) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= n) --r;
    return r;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

ClassAlgebra class_constants(const FiniteGroup& G, const ClassPartition& P) {
    ClassAlgebra A;
    A.k = P.count;
    A.a.assign(static_cast<size_t>(A.k) * A.k * A.k, 0);
    std::vector<std::vector<int>> members(P.count);
    for (int x = 0; x < G.n; ++x) members[P.class_of[x]].push_back(x);
    for (int i = 0; i < P.count; ++i)
        for (int x : members[i])
            for (int t = 0; t < P.count; ++t) {
                int y = G.mul(G.inv(x), P.reps[t]);
                int j = P.class_of[y];
                ++A.a[(static_cast<size_t>(i) * A.k + j) * A.k + t];
            }
    return A;
}

long dixon_prime(const FiniteGroup& G) {
    long e = exponent_of(G);
    long bound = 2 * isqrt_ceil(G.n);
    long p = 1 + e;
    while (p <= bound || !is_prime(p)) p += e;
    return p;
}

TablePtr character_table(GroupPtr G, long order_cap) {
    if (G->n > order_cap)
        throw OrderCapExceeded("character table of order " + std::to_string(G->n) +
                               " exceeds the cap of " + std::to_string(order_cap));

    {
        std::lock_guard<std::mutex> lk(built_tables_mu);
        auto it = built_tables().find(G->mul_table);
        if (it != built_tables().end()) {
            if (it->second->group == G) return it->second;
            auto T = std::make_shared<CharacterTable>(*it->second);
            T->group = G;
            return T;
        }
    }

    auto T = std::make_shared<CharacterTable>();
    T->group = G;
    T->classes = conjugacy_classes(*G);
    const ClassPartition& P = T->classes;
    const int k = P.count;
    const long n = G->n;
    const long e = exponent_of(*G);
    const Fp F{dixon_prime(*G)};

    ClassAlgebra A = class_constants(*G, P);
    std::vector<int> inv_class(k);
    for (int c = 0; c < k; ++c) inv_class[c] = P.class_of[G->inv(P.reps[c])];

    // Common eigenvector refinement: split the full space under each class
    // matrix until every subspace is a line. Deterministic scan order keeps
    // the output reproducible.
    std::vector<Mat> spaces;
    {
        Mat full(k, Vec(k, 0));
        for (int i = 0; i < k; ++i) full[i][i] = 1;
        spaces.push_back(std::move(full));
    }
    for (int i = 1; i < k; ++i) {
        bool all_lines = std::all_of(spaces.begin(), spaces.end(),
                                     [](const Mat& S) { return S.size() == 1; });
        if (all_lines) break;
        std::vector<Mat> next;
        for (Mat& S : spaces) {
            const int d = static_cast<int>(S.size());
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            // Restriction R of the class matrix M_i to the subspace: columns
            // of R are coordinates of M_i * basis vector in the basis.
            Mat R(d, Vec(d, 0));
            for (int c = 0; c < d; ++c) {
                Vec img(k, 0);
                for (int j = 0; j < k; ++j) {
                    long acc = 0;
                    for (int t = 0; t < k; ++t)
                        if (S[c][t] != 0) acc = F.add(acc, F.mul(A.at(i, j, t) % F.p, S[c][t]));
                    img[j] = acc;
                }
                Vec coords = solve_in_basis(S, img, F);
                for (int r = 0; r < d; ++r) R[r][c] = coords[r];
            }
            int found = 0;
            for (long lam = 0; lam < F.p && found < d; ++lam) {
                Mat shifted = R;
                for (int r = 0; r < d; ++r) shifted[r][r] = F.sub(shifted[r][r], lam);
                Mat null = nullspace(std::move(shifted), F);
                if (null.empty()) continue;
                Mat sub;
                for (const Vec& coords : null) {
                    Vec v(k, 0);
                    for (int r = 0; r < d; ++r)
                        if (coords[r] != 0)
                            for (int t = 0; t < k; ++t)
                                v[t] = F.add(v[t], F.mul(coords[r], S[r][t]));
                    sub.push_back(std::move(v));
                }
                found += static_cast<int>(sub.size());
                next.push_back(std::move(sub));
            }
            if (found != d)
                throw VerificationFailed("class matrix failed to split its subspace completely");
        }
        spaces = std::move(next);
    }
    for (const Mat& S : spaces)
        if (S.size() != 1)
            throw VerificationFailed("class matrices left a subspace of dimension > 1");
    if (static_cast<int>(spaces.size()) != k)
        throw VerificationFailed("expected " + std::to_string(k) + " central characters");

    // Normalize each eigenvector to omega(identity class) = 1.
    std::vector<Vec> omega;
    for (const Mat& S : spaces) {
        Vec v = S[0];
        if (v[0] == 0) throw VerificationFailed("central character vanishes at the identity class");
        long iv = F.inv(v[0]);
        for (long& x : v) x = F.mul(x, iv);
        omega.push_back(std::move(v));
    }

    // Degrees from the second orthogonality of central characters.
    std::vector<long> deg_mod(k), degs(k);
    for (int r = 0; r < k; ++r) {
        long s = 0;
        for (int j = 0; j < k; ++j)
            s = F.add(s, F.mul(F.mul(omega[r][j], omega[r][inv_class[j]]), F.inv(P.sizes[j] % F.p)));
        long target = F.mul(n % F.p, F.inv(s));
        long d = -1;
        for (long x = 1; 2 * x < F.p; ++x)
            if (F.mul(x, x) == target) {
                d = x;
                break;
            }
        if (d < 0) throw VerificationFailed("degree has no square root below p/2");
        deg_mod[r] = d;
        degs[r] = d;
    }

    // Exact lift: chi(g_j) = sum_t m_t zeta_e^t with multiplicities read off
    // from the discrete Fourier expansion over a fixed primitive root theta.
    long theta = 0;
    for (long x = 2; x < F.p; ++x) {
        bool ord_e = F.pw(x, e) == 1;
        if (!ord_e) continue;
        bool primitive = true;
        for (long d = 1; d < e && primitive; ++d)
            if (e % d == 0 && F.pw(x, d) == 1) primitive = false;
        if (primitive) {
            theta = x;
            break;
        }
    }
    if (theta == 0 && e == 1) theta = 1;
    if (theta == 0) throw VerificationFailed("no primitive root of order e in F_p");

    std::vector<std::vector<int>> power_maps(e);
    for (long s = 0; s < e; ++s) power_maps[s] = power_class_map(*G, P, s);

    long inv_e = F.inv(e % F.p);
    std::vector<long> theta_pow(e);
    for (long t = 0; t < e; ++t) theta_pow[t] = F.pw(theta, t);
    long theta_inv = F.inv(theta);

    // Identical chi-power profiles lift to the identical value, and small
    // tables repeat values heavily, so the lift runs once per profile.
    std::map<std::vector<long>, Cyclotomic> lift_cache;
    std::vector<std::vector<Cyclotomic>> values(k, std::vector<Cyclotomic>(k));
    for (int r = 0; r < k; ++r) {
        for (int j = 0; j < k; ++j) {
            // chi mod p at the class of g_j^s
            std::vector<long> chi_pow(e);
            for (long s = 0; s < e; ++s) {
                int c = power_maps[s][j];
                chi_pow[s] = F.mul(F.mul(deg_mod[r], omega[r][c]), F.inv(P.sizes[c] % F.p));
            }
            auto hit = lift_cache.find(chi_pow);
            if (hit == lift_cache.end()) {
                std::vector<Rational> m(e, Rational(0));
                for (long t = 0; t < e; ++t) {
                    long acc = 0;
                    long tp = F.pw(theta_inv, t);
                    long cur = 1;
                    for (long s = 0; s < e; ++s) {
                        acc = F.add(acc, F.mul(chi_pow[s], cur));
                        cur = F.mul(cur, tp);
                    }
                    long mt = F.mul(acc, inv_e);
                    if (2 * mt >= F.p)
                        throw VerificationFailed("eigenvalue multiplicity does not lift below p/2");
                    m[t] = Rational(mt);
                }
                hit = lift_cache.emplace(std::move(chi_pow),
                                         Cyclotomic::from_exponents(e, m).minimal()).first;
            }
            values[r][j] = hit->second;
        }
    }

    // Deterministic row order: degree ascending, then value-lexicographic.
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (degs[a] != degs[b]) return degs[a] < degs[b];
        for (int j = 0; j < k; ++j) {
            int c = Cyclotomic::order_cmp(values[a][j], values[b][j]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    for (int r = 0; r < k; ++r) {
        T->values.push_back(std::move(values[order[r]]));
        T->degrees.push_back(degs[order[r]]);
    }

    // Exact acceptance gate for the construction.
    long sum_sq = 0;
    for (int r = 0; r < k; ++r) {
        if (T->degrees[r] <= 0 || n % T->degrees[r] != 0)
            throw VerificationFailed("character degree does not divide the group order");
        sum_sq += T->degrees[r] * T->degrees[r];
        if (!(T->at(r, 0) == Cyclotomic(T->degrees[r])))
            throw VerificationFailed("degree column disagrees with the lifted value");
    }
    if (sum_sq != n) throw VerificationFailed("degrees fail sum-of-squares");
    for (int j = 0; j < k; ++j)
        if (!(T->at(0, j) == Cyclotomic(1)))
            throw VerificationFailed("row 0 is not the trivial character");

    CycloAccumulator oacc(e);
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) {
            oacc.reset();
            for (int j = 0; j < k; ++j)
                oacc.add_product_conj(Rational(P.sizes[j]), T->at(r, j), T->at(s, j));
            Cyclotomic want(r == s ? n : 0);
            if (!(oacc.value() == want)) throw VerificationFailed("row orthogonality failed exactly");
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            oacc.reset();
            for (int r = 0; r < k; ++r) oacc.add_product_conj(Rational(1), T->at(r, i), T->at(r, j));
            Cyclotomic want(i == j ? n / P.sizes[i] : 0);
            if (!(oacc.value() == want)) throw VerificationFailed("column orthogonality failed exactly");
        }

    {
        std::lock_guard<std::mutex> lk(built_tables_mu);
        built_tables().emplace(G->mul_table, T);
    }
    return T;
}

SubgroupSet kernel_of(const CharacterTable& T, int row) {
    std::vector<int> ker;
    const Cyclotomic& deg = T.at(row, 0);
    for (int x = 0; x < T.group->n; ++x)
        if (T.at_element(row, x) == deg) ker.push_back(x);
    SubgroupSet S = make_subgroup(T.group, ker);
    if (!S.is_normal_in_ambient) throw VerificationFailed("character kernel is not normal");
    return S;
}

TablePtr quotient_table(const CharacterTable& T, const SubgroupSet& M) {
    // Inflation is determined by the ambient table and the kernel, so the
    // finished table is shared across calls. The stored ambient pointer keeps
    // the key's group alive for as long as the entry exists.
    struct QEntry {
        GroupPtr ambient;
        TablePtr table;
    };
    static std::mutex mu;
    static auto* memo = new std::map<std::pair<const FiniteGroup*, std::vector<int>>, QEntry>();
    std::pair<const FiniteGroup*, std::vector<int>> key{T.group.get(), M.elems};
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo->find(key);
        if (it != memo->end()) return it->second.table;
    }

    auto [Q, proj] = quotient(T.group, M);
    auto R = std::make_shared<CharacterTable>();
    R->group = Q;
    R->classes = conjugacy_classes(*Q);

    // Any preimage element works for evaluating an inflated row.
    std::vector<int> preimage(Q->n, -1);
    for (int x = 0; x < T.group->n; ++x)
        if (preimage[proj[x]] < 0) preimage[proj[x]] = x;

    std::vector<std::pair<long, std::vector<Cyclotomic>>> rows;
    for (int r = 0; r < T.rows(); ++r) {
        bool contains = true;
        for (int m : M.elems)
            if (!(T.at_element(r, m) == T.at(r, 0))) {
                contains = false;
                break;
            }
        if (!contains) continue;
        std::vector<Cyclotomic> row(R->classes.count);
        for (int c = 0; c < R->classes.count; ++c)
            row[c] = T.at_element(r, preimage[R->classes.reps[c]]);
        rows.emplace_back(T.degrees[r], std::move(row));
    }
    if (static_cast<int>(rows.size()) != R->classes.count)
        throw VerificationFailed("inflation row count does not match the quotient class count");

    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        for (size_t j = 0; j < a.second.size(); ++j) {
            int c = Cyclotomic::order_cmp(a.second[j], b.second[j]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    for (auto& [d, row] : rows) {
        R->degrees.push_back(d);
        R->values.push_back(std::move(row));
    }

    const int k = R->classes.count;
    CycloAccumulator acc(exponent_of(*Q));
    for (int r = 0; r < k; ++r)
        for (int s = 0; s < k; ++s) {
            acc.reset();
            for (int j = 0; j < k; ++j)
                acc.add_product_conj(Rational(R->classes.sizes[j]), R->at(r, j), R->at(s, j));
            if (!(acc.value() == Cyclotomic(r == s ? Q->n : 0)))
                throw VerificationFailed("quotient table fails row orthogonality");
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            acc.reset();
            for (int r = 0; r < k; ++r) acc.add_product_conj(Rational(1), R->at(r, i), R->at(r, j));
            if (!(acc.value() == Cyclotomic(i == j ? Q->n / R->classes.sizes[i] : 0)))
                throw VerificationFailed("quotient table fails column orthogonality");
        }

    std::lock_guard<std::mutex> lk(mu);
    memo->emplace(std::move(key), QEntry{T.group, R});
    return R;
}

Cyclotomic row_inner_product(const CharacterTable& T, int r, int s) {
    CycloAccumulator acc(exponent_of(*T.group));
    for (int j = 0; j < T.classes.count; ++j)
        acc.add_product_conj(Rational(T.classes.sizes[j]), T.at(r, j), T.at(s, j));
    return acc.value().scaled(Rational(1, T.group->n));
}

}  // namespace gct
