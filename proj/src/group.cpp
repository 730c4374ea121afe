#include "gct/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gct {

namespace {

int order_of_element(const FiniteGroup& G, int x) {
    int k = 1, y = x;
    while (y != 0) {
        y = G.mul(y, x);
        ++k;
    }
    return k;
}

void validate(FiniteGroup& G) {
    const int n = G.n;
    if (n <= 0) throw ValidationError("group order must be positive");
    for (int x = 0; x < n; ++x) {
        if (G.mul(0, x) != x) throw NoIdentity("row 0 is not the identity at column " + std::to_string(x));
        if (G.mul(x, 0) != x) throw NoIdentity("column 0 is not the identity at row " + std::to_string(x));
    }
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = G.mul(a, b);
            if (v < 0 || v >= n || seen[v])
                throw NotLatinSquare("row " + std::to_string(a) + " repeats or escapes at column " +
                                     std::to_string(b));
            seen[v] = 1;
        }
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            int v = G.mul(b, a);
            if (seen[v])
                throw NotLatinSquare("column " + std::to_string(a) + " repeats at row " + std::to_string(b));
            seen[v] = 1;
        }
    }
    // Full associativity check up to 512 elements, sampled above.
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                        throw NotAssociative("triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                             std::to_string(c) + ")");
    } else {
        unsigned long long s = 0x9e3779b97f4a7c15ULL;
        auto next = [&s]() {
            s ^= s << 13; s ^= s >> 7; s ^= s << 17;
            return s;
        };
        for (int i = 0; i < 200000; ++i) {
            int a = static_cast<int>(next() % n), b = static_cast<int>(next() % n),
                c = static_cast<int>(next() % n);
            if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c)))
                throw NotAssociative("triple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");
        }
    }
    G.inverses.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (G.mul(a, b) == 0) {
                G.inverses[a] = b;
                break;
            }
        }
        if (G.inverses[a] < 0 || G.mul(G.inverses[a], a) != 0)
            throw ValidationError("element " + std::to_string(a) + " lacks a two-sided inverse");
    }
    G.elem_orders.resize(n);
    for (int a = 0; a < n; ++a) {
        G.elem_orders[a] = order_of_element(G, a);
        if (n % G.elem_orders[a] != 0)
            throw ValidationError("element order of " + std::to_string(a) + " does not divide the group order");
    }
}

}  // namespace

bool SubgroupSet::contains(int x) const {
    return std::binary_search(elems.begin(), elems.end(), x);
}

GroupPtr from_cayley(const std::vector<std::vector<int>>& table, const std::string& name) {
    auto G = std::make_shared<FiniteGroup>();
    G->n = static_cast<int>(table.size());
    G->name = name;
    G->mul_table.reserve(static_cast<size_t>(G->n) * G->n);
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != G->n)
            throw ValidationError("Cayley table is not square");
        for (int v : row) G->mul_table.push_back(v);
    }
    validate(*G);
    return G;
}

GroupPtr from_permutations(const std::vector<Permutation>& gens, const std::string& name,
                           long order_cap) {
    size_t m = 0;
    for (const auto& g : gens) m = std::max(m, g.size());
    Permutation id(m);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Permutation> padded;
    for (auto g : gens) {
        size_t old = g.size();
        g.resize(m);
        for (size_t i = old; i < m; ++i) g[i] = static_cast<int>(i);
        std::vector<char> hit(m, 0);
        for (int v : g) {
            if (v < 0 || v >= static_cast<int>(m) || hit[v])
                throw ValidationError("generator is not a bijection");
            hit[v] = 1;
        }
        padded.push_back(std::move(g));
    }

    std::map<Permutation, int> index;
    std::vector<Permutation> elems{id};
    index[id] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : padded) {
            Permutation prod(m);
            for (size_t i = 0; i < m; ++i) prod[i] = g[elems[head][i]];
            if (index.emplace(prod, static_cast<int>(elems.size())).second) {
                elems.push_back(prod);
                if (static_cast<long>(elems.size()) > order_cap)
                    throw OrderCapExceeded("closure exceeded the order cap of " + std::to_string(order_cap));
            }
        }
    }

    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Permutation prod(m);
            for (size_t i = 0; i < m; ++i) prod[i] = elems[b][elems[a][i]];
            table[a][b] = index.at(prod);
        }
    return from_cayley(table, name);
}

ClassPartition conjugation_orbits(const FiniteGroup& G, const std::vector<int>& domain) {
    ClassPartition P;
    P.class_of.assign(G.n, -1);
    std::vector<char> in_domain(G.n, 0);
    for (int x : domain) in_domain[x] = 1;
    std::vector<char> done(G.n, 0);
    std::vector<std::vector<int>> orbits;
    for (int x : domain) {
        if (done[x]) continue;
        std::vector<int> orbit;
        std::vector<char> mark(G.n, 0);
        std::vector<int> stack{x};
        mark[x] = 1;
        while (!stack.empty()) {
            int y = stack.back();
            stack.pop_back();
            orbit.push_back(y);
            done[y] = 1;
            if (!in_domain[y]) throw Error("conjugation leaves the domain: it is not G-invariant");
            for (int g = 0; g < G.n; ++g) {
                int z = G.conj(y, g);
                if (!mark[z]) {
                    mark[z] = 1;
                    stack.push_back(z);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a[0] < b[0];
    });
    P.count = static_cast<int>(orbits.size());
    for (int c = 0; c < P.count; ++c) {
        P.reps.push_back(orbits[c][0]);
        P.sizes.push_back(static_cast<long>(orbits[c].size()));
        for (int y : orbits[c]) P.class_of[y] = c;
    }
    return P;
}

ClassPartition conjugacy_classes(const FiniteGroup& G) {
    std::vector<int> all(G.n);
    std::iota(all.begin(), all.end(), 0);
    return conjugation_orbits(G, all);
}

int element_power(const FiniteGroup& G, int x, long s) {
    long o = G.elem_orders[x];
    s %= o;
    if (s < 0) s += o;
    int acc = 0, base = x;
    while (s > 0) {
        if (s & 1) acc = G.mul(acc, base);
        base = G.mul(base, base);
        s >>= 1;
    }
    return acc;
}

std::vector<int> power_class_map(const FiniteGroup& G, const ClassPartition& P, long s) {
    std::vector<int> out(P.count);
    for (int c = 0; c < P.count; ++c) out[c] = P.class_of[element_power(G, P.reps[c], s)];
    return out;
}

long exponent_of(const FiniteGroup& G) {
    long e = 1;
    for (int o : G.elem_orders) e = std::lcm(e, static_cast<long>(o));
    return e;
}

std::vector<int> generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(G.n, 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (int g : gens)
        if (!in[g]) {
            in[g] = 1;
            elems.push_back(g);
        }
    for (size_t head = 0; head < elems.size(); ++head) {
        for (size_t j = 0; j < elems.size(); ++j) {
            int p = G.mul(elems[head], elems[j]);
            if (!in[p]) {
                in[p] = 1;
                elems.push_back(p);
            }
            int q = G.mul(elems[j], elems[head]);
            if (!in[q]) {
                in[q] = 1;
                elems.push_back(q);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<int> small_generating_set(const FiniteGroup& G, const std::vector<int>& elems) {
    std::vector<int> domain = elems;
    if (domain.empty()) {
        domain.resize(static_cast<size_t>(G.n));
        for (int x = 0; x < G.n; ++x) domain[static_cast<size_t>(x)] = x;
    }
    std::vector<int> gens;
    std::vector<int> closure{0};
    while (closure.size() < domain.size()) {
        std::vector<char> in(G.n, 0);
        for (int x : closure) in[x] = 1;
        int pick = -1;
        for (int x : domain)
            if (!in[x]) {
                pick = x;
                break;
            }
        gens.push_back(pick);
        closure = generated_subgroup(G, gens);
    }
    return gens;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& elems) {
    std::vector<char> in(G.n, 0);
    for (int x : elems) in[x] = 1;
    if (!in[0]) return false;
    for (int a : elems)
        for (int b : elems)
            if (!in[G.mul(a, b)]) return false;
    return true;
}

bool is_normal_set(const FiniteGroup& G, const std::vector<int>& elems) {
    std::vector<char> in(G.n, 0);
    for (int x : elems) in[x] = 1;
    for (int x : elems)
        for (int g = 0; g < G.n; ++g)
            if (!in[G.conj(x, g)]) return false;
    return true;
}

SubgroupSet make_subgroup(GroupPtr G, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!is_subgroup(*G, elems)) throw ValidationError("element set is not closed");
    SubgroupSet S;
    S.ambient = G;
    S.is_normal_in_ambient = is_normal_set(*G, elems);
    S.elems = std::move(elems);
    return S;
}

SubgroupSet trivial_subgroup(GroupPtr G) { return make_subgroup(G, {0}); }

SubgroupSet full_subgroup(GroupPtr G) {
    std::vector<int> all(G->n);
    std::iota(all.begin(), all.end(), 0);
    return make_subgroup(G, all);
}

std::vector<SubgroupSet> normal_subgroups(GroupPtr G) {
    ClassPartition P = conjugacy_classes(*G);
    std::vector<std::vector<int>> classes(P.count);
    for (int x = 0; x < G->n; ++x) classes[P.class_of[x]].push_back(x);

    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> work{{0}};
    found.insert({0});
    for (size_t head = 0; head < work.size(); ++head) {
        std::vector<int> base = work[head];
        for (int c = 1; c < P.count; ++c) {
            if (std::binary_search(base.begin(), base.end(), classes[c][0])) continue;
            std::vector<int> gens = base;
            gens.insert(gens.end(), classes[c].begin(), classes[c].end());
            std::vector<int> J = generated_subgroup(*G, gens);
            if (found.insert(J).second) work.push_back(std::move(J));
        }
    }
    std::vector<SubgroupSet> out;
    for (const auto& e : found) out.push_back(make_subgroup(G, e));
    std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    for (const auto& s : out)
        if (!s.is_normal_in_ambient)
            throw VerificationFailed("normal_subgroups produced a non-normal member");
    return out;
}

SubgroupSet commutator(GroupPtr G, const SubgroupSet& A, const SubgroupSet& B) {
    std::vector<int> gens;
    for (int a : A.elems)
        for (int b : B.elems)
            gens.push_back(G->mul(G->mul(G->inv(a), G->inv(b)), G->mul(a, b)));
    return make_subgroup(G, generated_subgroup(*G, gens));
}

SubgroupSet center(GroupPtr G) {
    std::vector<int> z;
    for (int x = 0; x < G->n; ++x) {
        bool central = true;
        for (int g = 0; g < G->n && central; ++g)
            if (G->mul(x, g) != G->mul(g, x)) central = false;
        if (central) z.push_back(x);
    }
    return make_subgroup(G, z);
}

GSeries lower_central_g_series(GroupPtr G, const SubgroupSet& N) {
    if (!N.is_normal_in_ambient) throw NotNormal("lower central G-series needs N normal in G");
    GSeries S;
    S.ascending = false;
    S.terms.push_back(N);
    SubgroupSet full = full_subgroup(G);
    while (true) {
        SubgroupSet next = commutator(G, S.terms.back(), full);
        if (next.elems == S.terms.back().elems) break;
        S.terms.push_back(std::move(next));
    }
    return S;
}

GSeries upper_central_g_series(GroupPtr G, const SubgroupSet& N) {
    if (!N.is_normal_in_ambient) throw NotNormal("upper central G-series needs N normal in G");
    GSeries S;
    S.ascending = true;
    S.terms.push_back(trivial_subgroup(G));
    while (true) {
        const SubgroupSet& Z = S.terms.back();
        // x N-member lifts into the next term iff every commutator [x,g] stays
        // inside the current term.
        std::vector<int> next;
        for (int x : N.elems) {
            bool ok = true;
            for (int g = 0; g < G->n && ok; ++g) {
                int comm = G->mul(G->mul(G->inv(x), G->inv(g)), G->mul(x, g));
                if (!Z.contains(comm)) ok = false;
            }
            if (ok) next.push_back(x);
        }
        if (next == Z.elems) break;
        S.terms.push_back(make_subgroup(G, next));
    }
    return S;
}

std::optional<int> hypercentral_g_length(GroupPtr G, const SubgroupSet& N) {
    GSeries lower = lower_central_g_series(G, N);
    GSeries upper = upper_central_g_series(G, N);
    bool lower_terminates = lower.terms.back().order() == 1;
    bool upper_terminates = upper.terms.back().elems == N.elems;
    if (lower_terminates != upper_terminates)
        throw VerificationFailed("central G-series disagree about hypercentrality");
    if (!lower_terminates) return std::nullopt;
    int l_lower = static_cast<int>(lower.terms.size()) - 1;
    int l_upper = static_cast<int>(upper.terms.size()) - 1;
    if (l_lower != l_upper)
        throw VerificationFailed("central G-series lengths disagree: " + std::to_string(l_lower) + " vs " +
                                 std::to_string(l_upper));
    return l_lower;
}

std::pair<GroupPtr, std::vector<int>> quotient(GroupPtr G, const SubgroupSet& M) {
    if (!M.is_normal_in_ambient) throw NotNormal("quotient needs a normal subgroup");
    std::vector<int> coset_min(G->n, -1);
    for (int x = 0; x < G->n; ++x) {
        int best = G->n;
        for (int m : M.elems) best = std::min(best, G->mul(x, m));
        coset_min[x] = best;
    }
    std::vector<int> reps;
    for (int x = 0; x < G->n; ++x)
        if (coset_min[x] == x) reps.push_back(x);
    std::vector<int> proj(G->n);
    for (int x = 0; x < G->n; ++x)
        proj[x] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), coset_min[x]) - reps.begin());
    const int q = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(q, std::vector<int>(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) table[a][b] = proj[G->mul(reps[a], reps[b])];
    GroupPtr Q = from_cayley(table, G->name + "/" + std::to_string(M.order()));
    return {Q, proj};
}

std::pair<GroupPtr, std::vector<int>> subgroup_as_group(GroupPtr G, const SubgroupSet& N) {
    const auto& e = N.elems;
    const int m = static_cast<int>(e.size());
    std::vector<int> local(G->n, -1);
    for (int i = 0; i < m; ++i) local[e[i]] = i;
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) table[a][b] = local[G->mul(e[a], e[b])];
    GroupPtr H = from_cayley(table, G->name + "-sub" + std::to_string(m));
    return {H, e};
}

}  // namespace gct
