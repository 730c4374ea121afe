#include "gct/structure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace gct {

long p_part(long m, long p) {
    long q = 1;
    while (m % p == 0) {
        m /= p;
        q *= p;
    }
    return q;
}

std::vector<long> prime_divisors(long m) {
    std::vector<long> ps;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) ps.push_back(m);
    return ps;
}

bool is_p_element(const FiniteGroup& G, int x, long p) {
    long o = G.elem_orders[x];
    return p_part(o, p) == o;
}

std::vector<SubgroupSet> all_subgroups(GroupPtr G) {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> work;
    found.insert({0});
    work.push_back({0});
    for (size_t head = 0; head < work.size(); ++head) {
        std::vector<int> base = work[head];
        for (int x = 1; x < G->n; ++x) {
            if (std::binary_search(base.begin(), base.end(), x)) continue;
            std::vector<int> gens = base;
            gens.push_back(x);
            std::vector<int> J = generated_subgroup(*G, gens);
            if (found.insert(J).second) work.push_back(std::move(J));
        }
    }
    std::vector<SubgroupSet> out;
    out.reserve(found.size());
    for (const auto& e : found) out.push_back(make_subgroup(G, e));
    std::sort(out.begin(), out.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return out;
}

std::vector<SubgroupSet> maximal_subgroups(GroupPtr G) {
    std::vector<SubgroupSet> subs = all_subgroups(G);
    std::vector<SubgroupSet> maximal;
    for (size_t i = 0; i < subs.size(); ++i) {
        if (subs[i].order() == G->n) continue;
        bool is_max = true;
        for (size_t j = 0; j < subs.size() && is_max; ++j) {
            if (subs[j].order() == G->n || j == i) continue;
            if (subs[j].order() <= subs[i].order()) continue;
            if (std::includes(subs[j].elems.begin(), subs[j].elems.end(), subs[i].elems.begin(),
                              subs[i].elems.end()))
                is_max = false;
        }
        if (is_max) maximal.push_back(subs[i]);
    }
    return maximal;
}

SubgroupSet frattini_subgroup(GroupPtr G) {
    // The subgroup sweep is the expensive part; the result per group object
    // is fixed, and the stored set keeps the group alive, so the address
    // cannot be reused while the entry exists.
    static std::mutex mu;
    static auto* memo = new std::map<const FiniteGroup*, SubgroupSet>();
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo->find(G.get());
        if (it != memo->end()) return it->second;
    }
    std::vector<SubgroupSet> maxes = maximal_subgroups(G);
    SubgroupSet F;
    if (maxes.empty()) {
        F = full_subgroup(G);  // trivial group
    } else {
        std::vector<int> inter = maxes[0].elems;
        for (size_t i = 1; i < maxes.size(); ++i) {
            std::vector<int> next;
            std::set_intersection(inter.begin(), inter.end(), maxes[i].elems.begin(),
                                  maxes[i].elems.end(), std::back_inserter(next));
            inter = std::move(next);
        }
        F = make_subgroup(G, inter);
    }
    std::lock_guard<std::mutex> lk(mu);
    memo->emplace(G.get(), F);
    return F;
}

bool is_nilpotent_group(GroupPtr G, const SubgroupSet& N) {
    // Nilpotent iff every Sylow subgroup is normal, i.e. the p-elements form
    // a subgroup of full Sylow order for every p.
    for (long p : prime_divisors(N.order())) {
        std::vector<int> pelems;
        for (int x : N.elems)
            if (is_p_element(*G, x, p)) pelems.push_back(x);
        if (static_cast<long>(pelems.size()) != p_part(N.order(), p)) return false;
        if (!is_subgroup(*G, pelems)) return false;
    }
    return true;
}

int nilpotency_class_of(GroupPtr G, const SubgroupSet& N) {
    if (!is_nilpotent_group(G, N)) return -1;
    // Lower central series of N as an abstract group, in ambient coordinates.
    SubgroupSet term = N;
    int c = 0;
    while (term.order() > 1) {
        std::vector<int> gens;
        for (int a : term.elems)
            for (int b : N.elems)
                gens.push_back(G->mul(G->mul(G->inv(a), G->inv(b)), G->mul(a, b)));
        std::vector<int> next = generated_subgroup(*G, gens);
        SubgroupSet next_s;
        next_s.ambient = G;
        next_s.elems = std::move(next);
        if (next_s.elems == term.elems)
            throw VerificationFailed("nilpotent group with a stalled lower central series");
        term = std::move(next_s);
        ++c;
    }
    return c;
}

bool is_solvable_group(GroupPtr G, const SubgroupSet& N) {
    std::vector<int> term = N.elems;
    while (term.size() > 1) {
        std::vector<int> gens;
        for (int a : term)
            for (int b : term)
                gens.push_back(G->mul(G->mul(G->inv(a), G->inv(b)), G->mul(a, b)));
        std::vector<int> next = generated_subgroup(*G, gens);
        if (next == term) return false;
        term = std::move(next);
    }
    return true;
}

SubgroupSet sylow_subgroup(GroupPtr G, const SubgroupSet& N, long p) {
    long target = p_part(N.order(), p);
    std::vector<int> P{0};
    while (static_cast<long>(P.size()) < target) {
        bool grew = false;
        for (int y : N.elems) {
            if (!is_p_element(*G, y, p) || std::binary_search(P.begin(), P.end(), y)) continue;
            std::vector<int> gens = P;
            gens.push_back(y);
            std::vector<int> J = generated_subgroup(*G, gens);
            long sz = static_cast<long>(J.size());
            if (sz == p_part(sz, p) && sz <= target) {
                P = std::move(J);
                grew = true;
                break;
            }
        }
        if (!grew) throw VerificationFailed("Sylow growth stalled below the Sylow order");
    }
    return make_subgroup(G, P);
}

SubgroupSet o_p_subgroup(GroupPtr G, const SubgroupSet& N, long p) {
    // Generated by the p'-elements; the p'-part of any mixed-order element is
    // again an element of N, so the order sweep already covers it.
    std::vector<int> gens;
    for (int x : N.elems)
        if (G->elem_orders[x] % p != 0) gens.push_back(x);
    return make_subgroup(G, generated_subgroup(*G, gens));
}

SubgroupSet o_p_prime_subgroup(GroupPtr G, const SubgroupSet& N, long p) {
    std::vector<int> gens;
    for (int x : N.elems)
        if (is_p_element(*G, x, p)) gens.push_back(x);
    return make_subgroup(G, generated_subgroup(*G, gens));
}

StructuralOracles structural_oracles(GroupPtr G, const SubgroupSet& N, long p) {
    StructuralOracles R;
    R.o_p = o_p_subgroup(G, N, p);
    R.o_p_prime = o_p_prime_subgroup(G, N, p);
    R.frattini = frattini_subgroup(G);
    R.is_nilpotent = is_nilpotent_group(G, N);
    R.nilpotency_class = nilpotency_class_of(G, N);
    R.is_solvable = is_solvable_group(G, N);
    R.sylow_p_order = p_part(N.order(), p);

    std::vector<int> pprime;
    for (int x : N.elems)
        if (G->elem_orders[x] % p != 0) pprime.push_back(x);
    if (static_cast<long>(pprime.size()) == N.order() / R.sylow_p_order && is_subgroup(*G, pprime)) {
        R.has_normal_p_complement = true;
        R.p_complement = make_subgroup(G, pprime);
    }
    return R;
}

}  // namespace gct
