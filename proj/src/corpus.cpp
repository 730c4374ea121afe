#include "gct/corpus.hpp"

#include <array>

namespace gct {

namespace {

Permutation cycle(int m, std::initializer_list<int> pts) {
    Permutation p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    auto it = pts.begin();
    int first = *it;
    int prev = first;
    ++it;
    for (; it != pts.end(); ++it) {
        p[prev] = *it;
        prev = *it;
    }
    p[prev] = first;
    return p;
}

}  // namespace

GroupPtr trivial_group() { return from_cayley({{0}}, "1"); }

GroupPtr cyclic_group(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return from_cayley(t, "C" + std::to_string(n));
}

GroupPtr klein_four() {
    return from_permutations({cycle(4, {0, 1}), cycle(4, {2, 3})}, "C2xC2");
}

GroupPtr dihedral_group(int order) {
    int m = order / 2;
    Permutation rot(m), refl(m);
    for (int i = 0; i < m; ++i) {
        rot[i] = (i + 1) % m;
        refl[i] = (m - i) % m;
    }
    return from_permutations({rot, refl}, "D" + std::to_string(order));
}

GroupPtr dicyclic_group(int order) {
    int m = order / 4;
    int two_m = 2 * m;
    // normal form a^i b^j, index i + 2m*j
    auto idx = [two_m](int i, int j) { return ((i % two_m + two_m) % two_m) + two_m * j; };
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int i = 0; i < two_m; ++i)
        for (int j = 0; j < 2; ++j)
            for (int i2 = 0; i2 < two_m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int row = idx(i, j), col = idx(i2, j2);
                    if (j == 0)
                        t[row][col] = idx(i + i2, j2);
                    else if (j2 == 0)
                        t[row][col] = idx(i - i2, 1);
                    else
                        t[row][col] = idx(i - i2 + m, 0);
                }
    std::string name = order == 8 ? "Q8" : (order == 16 ? "Q16" : "Dic" + std::to_string(order));
    return from_cayley(t, name);
}

GroupPtr symmetric_3() {
    return from_permutations({cycle(3, {0, 1}), cycle(3, {0, 1, 2})}, "S3");
}

GroupPtr symmetric_4() {
    return from_permutations({cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})}, "S4");
}

GroupPtr alternating_4() {
    return from_permutations({cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})}, "A4");
}

GroupPtr sl_2_3() {
    // Faithful action on the eight nonzero vectors of F_3^2.
    std::array<std::pair<int, int>, 8> pts{{{0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}};
    auto pt_index = [&](int x, int y) {
        for (size_t i = 0; i < pts.size(); ++i)
            if (pts[i].first == x && pts[i].second == y) return static_cast<int>(i);
        throw Error("zero vector in SL(2,3) action");
    };
    auto act = [&](int a, int b, int c, int d) {
        Permutation p(8);
        for (size_t i = 0; i < pts.size(); ++i) {
            int x = pts[i].first, y = pts[i].second;
            p[i] = pt_index((a * x + b * y) % 3, (c * x + d * y) % 3);
        }
        return p;
    };
    return from_permutations({act(1, 1, 0, 1), act(0, 2, 1, 0)}, "SL(2,3)");
}

GroupPtr holomorph_c8() {
    // (i,s,t)*(i',s',t') = (i + i'*3^s*5^t mod 8, s^s', t^t'); index 4i+2s+t.
    auto idx = [](int i, int s, int t) { return 4 * ((i % 8 + 8) % 8) + 2 * s + t; };
    std::vector<std::vector<int>> t(32, std::vector<int>(32));
    const int mult[2][2] = {{1, 5}, {3, 7}};  // 3^s * 5^t mod 8
    for (int i = 0; i < 8; ++i)
        for (int s = 0; s < 2; ++s)
            for (int u = 0; u < 2; ++u)
                for (int i2 = 0; i2 < 8; ++i2)
                    for (int s2 = 0; s2 < 2; ++s2)
                        for (int u2 = 0; u2 < 2; ++u2)
                            t[idx(i, s, u)][idx(i2, s2, u2)] =
                                idx(i + i2 * mult[s][u], s ^ s2, u ^ u2);
    return from_cayley(t, "SG32-8");
}

GroupPtr q8_twisted_c4() {
    // Quaternion units 0:1 1:-1 2:i 3:-i 4:j 5:-j 6:k 7:-k.
    auto qmul = [](int a, int b) {
        int sa = a & 1, sb = b & 1;  // sign bits
        int xa = a >> 1, xb = b >> 1;  // 0:1 1:i 2:j 3:k
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        int s = sa ^ sb ^ sign[xa][xb];
        return (axis[xa][xb] << 1) | s;
    };
    // phi: i->j, j->-i, k->k (order 4; phi^2 is conjugation by k).
    static const int phi1[8] = {0, 1, 4, 5, 3, 2, 6, 7};
    auto phi_pow = [&](int q, int m) {
        for (int r = 0; r < m; ++r) q = phi1[q];
        return q;
    };
    auto idx = [](int q, int m) { return 4 * q + m; };
    std::vector<std::vector<int>> t(32, std::vector<int>(32));
    for (int q = 0; q < 8; ++q)
        for (int m = 0; m < 4; ++m)
            for (int q2 = 0; q2 < 8; ++q2)
                for (int m2 = 0; m2 < 4; ++m2)
                    t[idx(q, m)][idx(q2, m2)] = idx(qmul(q, phi_pow(q2, m)), (m + m2) % 4);
    return from_cayley(t, "SG32-9");
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"trivial", trivial_group, ""},
        {"c2", [] { return cyclic_group(2); }, ""},
        {"c4", [] { return cyclic_group(4); }, ""},
        {"c2c2", klein_four, ""},
        {"c9", [] { return cyclic_group(9); }, ""},
        {"c20", [] { return cyclic_group(20); }, ""},
        {"s3", symmetric_3, ""},
        {"d8", [] { return dihedral_group(8); }, ""},
        {"q8", [] { return dicyclic_group(8); }, ""},
        {"d10", [] { return dihedral_group(10); }, ""},
        {"a4", alternating_4, ""},
        {"d12", [] { return dihedral_group(12); }, ""},
        {"q16", [] { return dicyclic_group(16); }, ""},
        {"d16", [] { return dihedral_group(16); }, ""},
        {"d18", [] { return dihedral_group(18); }, ""},
        {"sl23", sl_2_3, ""},
        {"s4", symmetric_4, ""},
        {"dic120", [] { return dicyclic_group(120); }, "SmallGroup(120,3)"},
        {"sg32_8", holomorph_c8, "SmallGroup(32,8)"},
        {"sg32_9", q8_twisted_c4, "SmallGroup(32,9)"},
    };
    return entries;
}

GroupPtr corpus_group(const std::string& name) {
    for (const auto& e : corpus())
        if (e.name == name) return e.build();
    throw Error("unknown corpus group: " + name);
}

}  // namespace gct
