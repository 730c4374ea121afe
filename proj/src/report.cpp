#include "gct/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "json.hpp"

#include "gct/chartab.hpp"

namespace gct {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr long kSchemaVersion = 1;

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

std::string gens_text(const FiniteGroup& G, const std::vector<int>& elems) {
    std::vector<int> g = small_generating_set(G, elems);
    return g.empty() ? "-" : join_ints(g);
}

// Right-aligned `label | cells` block with per-column widths.
struct Grid {
    std::vector<std::pair<std::string, std::vector<std::string>>> lines;

    void add(std::string label, std::vector<std::string> cells) {
        lines.push_back({std::move(label), std::move(cells)});
    }

    std::string render() const {
        size_t lw = 0;
        std::vector<size_t> cw;
        for (const auto& ln : lines) {
            lw = std::max(lw, ln.first.size());
            if (ln.second.size() > cw.size()) cw.resize(ln.second.size(), 0);
            for (size_t j = 0; j < ln.second.size(); ++j)
                cw[j] = std::max(cw[j], ln.second[j].size());
        }
        std::ostringstream out;
        for (const auto& ln : lines) {
            out << ln.first << std::string(lw - ln.first.size(), ' ') << " |";
            for (size_t j = 0; j < ln.second.size(); ++j)
                out << ' ' << std::string(cw[j] - ln.second[j].size(), ' ') << ln.second[j];
            out << '\n';
        }
        return out.str();
    }
};

std::string state_text(Verdict::State s) {
    switch (s) {
        case Verdict::State::Holds:
            return "holds";
        case Verdict::State::Fails:
            return "fails";
        default:
            return "not applicable";
    }
}

std::string state_json(Verdict::State s) {
    switch (s) {
        case Verdict::State::Holds:
            return "holds";
        case Verdict::State::Fails:
            return "fails";
        default:
            return "not_applicable";
    }
}

// Oracle mismatches throw inside the checks, so a surviving cross_check
// always agrees with the verdict.
ordered_json oracle_json(const Verdict& v) {
    if (!v.cross_check) return nullptr;
    return "agrees";
}

void check_orthogonality(const CharacterTable& T) {
    for (int r = 0; r < T.rows(); ++r)
        for (int s = r; s < T.rows(); ++s) {
            Cyclotomic ip = row_inner_product(T, r, s);
            if (!(ip == Cyclotomic(r == s ? 1 : 0)))
                throw VerificationFailed("row orthogonality fails at rows " + std::to_string(r) +
                                         ", " + std::to_string(s) + " of " + T.group->name);
        }
}

long roundtrip_values(const CharacterTable& T) {
    long cnt = 0;
    for (int r = 0; r < T.rows(); ++r)
        for (int c = 0; c < T.classes.count; ++c) {
            const Cyclotomic& v = T.at(r, c);
            if (!(parse_cyclo(render_cyclo(v)) == v))
                throw VerificationFailed("render/parse round-trip changed the value at row " +
                                         std::to_string(r) + ", class " + std::to_string(c));
            ++cnt;
        }
    return cnt;
}

std::string group_header(const FiniteGroup& G, const CharacterTable* T) {
    std::ostringstream out;
    out << "group: " << G.name << "  order " << G.order() << "  exponent " << exponent_of(G);
    if (T) out << "  classes " << T->classes.count;
    out << '\n';
    return out.str();
}

ordered_json group_json(const FiniteGroup& G, const CharacterTable* T) {
    ordered_json j;
    j["name"] = G.name;
    j["order"] = G.order();
    j["exponent"] = exponent_of(G);
    if (T) j["classes"] = T->classes.count;
    return j;
}

ordered_json meta_json(const Fixture& fx) {
    ordered_json m = ordered_json::array();
    for (const auto& kv : fx.meta) m.push_back({{"key", kv.first}, {"value", kv.second}});
    return m;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Per-row report data of one G-character table, cross-checked on the spot.
struct GTableView {
    GCharTable gt;
    CliffordData cd;
    std::vector<long> A, B;
};

GTableView make_gtable_view(TablePtr T, const SubgroupSet& N) {
    GTableView v{build_g_char_table(T, N), {}, {}, {}};
    v.cd = clifford_oracle(v.gt);
    long n = N.order();
    for (int i = 0; i < v.gt.k(); ++i) {
        long A = relation_A(v.gt, i);
        long B = relation_B(v.gt, i);
        if (v.gt.lambda_diag[i] != n * v.cd.t[i] * v.cd.e[i] * v.cd.e[i])
            throw PathDisagreement("lambda_" + std::to_string(i + 1) +
                                   " differs from |N| t e^2 at order " + std::to_string(n));
        if (A != v.cd.e[i] * v.cd.e[i] * v.cd.t[i])
            throw PathDisagreement("relation A disagrees with e^2 t at cell " + std::to_string(i));
        if (B != v.cd.t[i] * v.cd.theta_deg[i] * v.cd.theta_deg[i])
            throw PathDisagreement("relation B disagrees with t theta(1)^2 at cell " +
                                   std::to_string(i));
        if (B != v.cd.min_char_deg[i] * v.cd.theta_deg[i])
            throw VerificationFailed("leader identity theta_hat(1) theta(1) = B fails at cell " +
                                     std::to_string(i));
        v.A.push_back(A);
        v.B.push_back(B);
    }
    return v;
}

}  // namespace

std::vector<SubgroupSet> indexed_normals(GroupPtr G) {
    std::vector<SubgroupSet> ns = normal_subgroups(G);
    std::sort(ns.begin(), ns.end(), [](const SubgroupSet& a, const SubgroupSet& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elems < b.elems;
    });
    return ns;
}

std::string report_table(const Fixture& fx, TablePtr T, const ReportOptions& opt) {
    const FiniteGroup& G = *T->group;
    check_orthogonality(*T);
    if (opt.json) {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "table";
        j["fixture"] = fx.name;
        j["meta"] = meta_json(fx);
        j["group"] = group_json(G, T.get());
        ordered_json classes = ordered_json::array();
        for (int c = 0; c < T->classes.count; ++c) {
            ordered_json e;
            e["index"] = c + 1;
            e["size"] = T->classes.sizes[c];
            e["rep"] = T->classes.reps[c];
            e["rep_order"] = G.elem_orders[T->classes.reps[c]];
            classes.push_back(e);
        }
        j["classes"] = classes;
        ordered_json chars = ordered_json::array();
        for (int r = 0; r < T->rows(); ++r) {
            ordered_json row;
            row["index"] = r + 1;
            row["degree"] = T->degrees[r];
            ordered_json vals = ordered_json::array();
            for (int c = 0; c < T->classes.count; ++c) vals.push_back(render_cyclo(T->at(r, c)));
            row["values"] = vals;
            chars.push_back(row);
        }
        j["characters"] = chars;
        j["exact"] = "ok";
        return dump(j);
    }
    std::ostringstream out;
    out << group_header(G, T.get());
    for (const auto& kv : fx.meta) out << "meta: " << kv.first << ' ' << kv.second << '\n';
    Grid g;
    std::vector<std::string> idx, size, rep, rord;
    for (int c = 0; c < T->classes.count; ++c) {
        idx.push_back(std::to_string(c + 1));
        size.push_back(std::to_string(T->classes.sizes[c]));
        rep.push_back(std::to_string(T->classes.reps[c]));
        rord.push_back(std::to_string(G.elem_orders[T->classes.reps[c]]));
    }
    g.add("class", idx);
    g.add("size", size);
    g.add("rep", rep);
    g.add("reporder", rord);
    for (int r = 0; r < T->rows(); ++r) {
        std::vector<std::string> vals;
        for (int c = 0; c < T->classes.count; ++c) vals.push_back(render_cyclo(T->at(r, c)));
        g.add("chi_" + std::to_string(r + 1), vals);
    }
    out << g.render();
    out << "exact: ok\n";
    return out.str();
}

std::string report_normals(const Fixture& fx, const ReportOptions& opt) {
    GroupPtr G = fx.group;
    std::vector<SubgroupSet> ns = indexed_normals(G);
    if (opt.json) {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "normals";
        j["fixture"] = fx.name;
        j["group"] = group_json(*G, nullptr);
        j["count"] = ns.size();
        ordered_json list = ordered_json::array();
        for (size_t k = 0; k < ns.size(); ++k) {
            ordered_json e;
            e["index"] = k + 1;
            e["order"] = ns[k].order();
            e["quotient_order"] = G->order() / ns[k].order();
            e["generators"] = small_generating_set(*G, ns[k].elems);
            e["elements"] = ns[k].elems;
            list.push_back(e);
        }
        j["normals"] = list;
        return dump(j);
    }
    std::ostringstream out;
    out << group_header(*G, nullptr);
    out << "normal subgroups: " << ns.size() << '\n';
    for (size_t k = 0; k < ns.size(); ++k)
        out << "  " << (k + 1) << "  order " << ns[k].order() << "  |G:N| "
            << G->order() / ns[k].order() << "  generators: " << gens_text(*G, ns[k].elems)
            << '\n';
    return out.str();
}

std::string report_gtable(const Fixture& fx, TablePtr T, int normal_index, const SubgroupSet& N,
                          const ReportOptions& opt) {
    GroupPtr G = T->group;
    GTableView v = make_gtable_view(T, N);
    const GCharTable& gt = v.gt;
    if (opt.json) {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "gtable";
        j["fixture"] = fx.name;
        j["group"] = group_json(*G, T.get());
        j["normal"] = normal_index;
        j["normal_order"] = N.order();
        j["k"] = gt.k();
        ordered_json classes = ordered_json::array();
        for (int c = 0; c < gt.k(); ++c) {
            ordered_json e;
            e["rep"] = gt.g_classes.reps[c];
            e["size"] = gt.D[c];
            classes.push_back(e);
        }
        j["g_classes"] = classes;
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < gt.k(); ++i) {
            ordered_json e;
            e["index"] = i + 1;
            e["degree"] = gt.chi_deg(i);
            ordered_json cell = ordered_json::array();
            for (int r : gt.cells[i]) cell.push_back(r + 1);
            e["cell"] = cell;
            e["rep_row"] = gt.delta[i] + 1;
            e["lambda"] = gt.lambda_diag[i];
            e["A"] = v.A[i];
            e["B"] = v.B[i];
            e["t"] = v.cd.t[i];
            e["e"] = v.cd.e[i];
            e["theta_degree"] = v.cd.theta_deg[i];
            ordered_json vals = ordered_json::array();
            for (int c = 0; c < gt.k(); ++c) vals.push_back(render_cyclo(gt.X[i][c]));
            e["values"] = vals;
            rows.push_back(e);
        }
        j["rows"] = rows;
        j["exact"] = "ok";
        return dump(j);
    }
    std::ostringstream out;
    out << group_header(*G, T.get());
    out << "normal: " << normal_index << "  order " << N.order()
        << "  generators: " << gens_text(*G, N.elems) << '\n';
    out << "g-classes: " << gt.k() << '\n';
    Grid g;
    std::vector<std::string> rep, size;
    for (int c = 0; c < gt.k(); ++c) {
        rep.push_back(std::to_string(gt.g_classes.reps[c]));
        size.push_back(std::to_string(gt.D[c]));
    }
    g.add("rep", rep);
    g.add("size", size);
    for (int i = 0; i < gt.k(); ++i) {
        std::vector<std::string> vals;
        for (int c = 0; c < gt.k(); ++c) vals.push_back(render_cyclo(gt.X[i][c]));
        g.add("chi_" + std::to_string(i + 1), vals);
    }
    out << g.render();
    for (int i = 0; i < gt.k(); ++i) {
        out << "row " << (i + 1) << ": deg " << gt.chi_deg(i) << "  cell {";
        for (size_t t = 0; t < gt.cells[i].size(); ++t)
            out << (t ? " " : "") << gt.cells[i][t] + 1;
        out << "}  rep ambient " << gt.delta[i] + 1 << "  lambda " << gt.lambda_diag[i] << "  A "
            << v.A[i] << "  B " << v.B[i] << "  t " << v.cd.t[i] << "  e " << v.cd.e[i]
            << "  theta(1) " << v.cd.theta_deg[i] << '\n';
    }
    out << "exact: ok\n";
    return out.str();
}

std::string report_series(const Fixture& fx, TablePtr T, int normal_index, const SubgroupSet& N,
                          bool lower, bool upper, const ReportOptions& opt) {
    GroupPtr G = T->group;
    GSeries lo = lower_central_g_series(G, N);
    GSeries up = upper_central_g_series(G, N);
    std::optional<int> hl = hypercentral_g_length(G, N);
    if (opt.json) {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "series";
        j["fixture"] = fx.name;
        j["group"] = group_json(*G, nullptr);
        j["normal"] = normal_index;
        j["normal_order"] = N.order();
        auto series_json = [&](const GSeries& S, int base) {
            ordered_json arr = ordered_json::array();
            for (size_t t = 0; t < S.terms.size(); ++t) {
                ordered_json e;
                e["index"] = static_cast<long>(t) + base;
                e["order"] = S.terms[t].order();
                e["generators"] = small_generating_set(*G, S.terms[t].elems);
                e["elements"] = S.terms[t].elems;
                arr.push_back(e);
            }
            return arr;
        };
        j["lower"] = lower ? series_json(lo, 1) : ordered_json(nullptr);
        j["upper"] = upper ? series_json(up, 0) : ordered_json(nullptr);
        j["hypercentral"] = hl.has_value();
        j["length"] = hl ? ordered_json(*hl) : ordered_json(nullptr);
        return dump(j);
    }
    std::ostringstream out;
    out << group_header(*G, nullptr);
    out << "normal: " << normal_index << "  order " << N.order() << '\n';
    if (lower) {
        out << "lower central g-series:\n";
        for (size_t t = 0; t < lo.terms.size(); ++t)
            out << "  G_" << (t + 1) << "  order " << lo.terms[t].order()
                << "  generators: " << gens_text(*G, lo.terms[t].elems) << '\n';
    }
    if (upper) {
        out << "upper central g-series:\n";
        for (size_t t = 0; t < up.terms.size(); ++t)
            out << "  Z_" << t << "  order " << up.terms[t].order()
                << "  generators: " << gens_text(*G, up.terms[t].elems) << '\n';
    }
    if (hl)
        out << "hypercentral: yes  length " << *hl << '\n';
    else
        out << "hypercentral: no  (lower series stalls at order " << lo.terms.back().order()
            << ")\n";
    return out.str();
}

CheckReport report_check(const std::string& which, const Fixture& fx, TablePtr T,
                         int normal_index, const SubgroupSet* N, long p,
                         const ReportOptions& opt) {
    GroupPtr G = T->group;
    Verdict v;
    if (which == "thompson") {
        GCharTable gt = build_g_char_table(T, *N);
        CliffordData cd = clifford_oracle(gt);
        v = thompson_check(gt, cd, p);
    } else if (which == "nmi") {
        v = is_nmi_group(T);
    } else if (which == "gnmi") {
        v = is_g_invariant_nmi_subgroup(T, *N);
    } else if (which == "taketa") {
        v = taketa_check(T, *N);
    } else if (which == "fratt") {
        v = fratt_check(T, *N);
    } else {
        throw Error("unknown check: " + which);
    }
    CheckReport rep;
    rep.verdict = v;
    if (opt.json) {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "check";
        j["check"] = which;
        j["fixture"] = fx.name;
        j["group"] = group_json(*G, nullptr);
        j["normal"] = N ? ordered_json(normal_index) : ordered_json(nullptr);
        j["normal_order"] = N ? ordered_json(N->order()) : ordered_json(nullptr);
        j["p"] = which == "thompson" ? ordered_json(p) : ordered_json(nullptr);
        j["verdict"] = state_json(v.state);
        j["oracle"] = oracle_json(v);
        j["witness"] = v.witness;
        rep.text = dump(j);
        return rep;
    }
    std::ostringstream out;
    out << group_header(*G, nullptr);
    if (N)
        out << "normal: " << normal_index << "  order " << N->order() << '\n';
    out << "check " << which;
    if (which == "thompson") out << " (p = " << p << ")";
    out << ": " << state_text(v.state) << '\n';
    out << "oracle: " << (v.cross_check ? "agrees" : "-") << '\n';
    out << "witness: " << v.witness << '\n';
    rep.text = out.str();
    return rep;
}

std::string report_verify(const Fixture& fx, const ReportOptions& opt) {
    GroupPtr G = fx.group;
    TablePtr T = character_table(G);
    long checks = 0;

    check_orthogonality(*T);
    ++checks;
    long rt = roundtrip_values(*T);
    checks += rt;
    for (int r = 0; r < T->rows(); ++r) {
        determinant_order(*T, r);
        ++checks;
    }
    std::vector<long> gprimes = prime_divisors(G->order());
    for (long p : gprimes) {
        p_elements_from_table(*T, p);
        ++checks;
    }
    Verdict nmi = is_nmi_group(T);
    ++checks;
    Verdict nmis = nmi_structure_check(T);
    ++checks;

    std::vector<SubgroupSet> ns = indexed_normals(G);

    struct Entry {
        long index, order, k, comm_order, lin;
        std::vector<long> lambda, A, B, mcd, lcd;
        Verdict nilp, solv, fratt, taketa, gnmi;
        std::vector<std::pair<long, Verdict>> thompson;
        std::vector<std::pair<long, long>> s_values;
    };
    std::vector<Entry> entries;

    for (size_t kidx = 0; kidx < ns.size(); ++kidx) {
        const SubgroupSet& N = ns[kidx];
        Entry en;
        en.index = static_cast<long>(kidx) + 1;
        en.order = N.order();
        GTableView v = make_gtable_view(T, N);
        checks += 4L * v.gt.k();
        en.k = v.gt.k();
        en.lambda = v.gt.lambda_diag;
        en.A = v.A;
        en.B = v.B;
        for (int i = 0; i < v.gt.k(); ++i)
            for (int c = 0; c < v.gt.k(); ++c) {
                const Cyclotomic& z = v.gt.X[i][c];
                if (!(parse_cyclo(render_cyclo(z)) == z))
                    throw VerificationFailed("round-trip changed a g-table value");
                ++checks;
            }
        std::vector<int> lin = lin_g(v.gt, v.cd);
        en.mcd = min_chars(v.gt, v.cd);
        en.lcd = leader_degs(v.gt, v.cd);
        checks += 3;
        SubgroupSet comm = commutator_from_table(v.gt);
        en.comm_order = comm.order();
        en.lin = static_cast<long>(lin.size());
        if (N.order() / comm.order() != en.lin)
            throw VerificationFailed("|N : [N,G]| differs from the number of linear cells at N " +
                                     std::to_string(en.index));
        checks += 2;
        en.nilp = nilpotent_from_table(T, N);
        en.solv = solvable_from_table(T, N);
        en.fratt = fratt_check(T, N);
        en.gnmi = is_g_invariant_nmi_subgroup(T, N);
        en.taketa = taketa_check(T, N);
        checks += 5;
        for (long p : prime_divisors(N.order())) {
            SData sd = s_of_n(v.gt, v.cd, p);
            en.s_values.push_back({p, sd.s_value});
            en.thompson.push_back({p, thompson_check(v.gt, v.cd, p)});
            checks += 2;
        }

        // Alternative representative system: same cells, same B per cell,
        // same linear cells, Mcd, Lcd, and [N,G]. (The lambda multiset is
        // legitimately representative-dependent.)
        std::mt19937_64 rng(opt.seed * 0x9E3779B97F4A7C15ull + kidx + 1);
        std::vector<int> delta2;
        for (const auto& cell : v.gt.cells) {
            bool principal = std::find(cell.begin(), cell.end(), 0) != cell.end();
            delta2.push_back(principal ? 0 : cell[rng() % cell.size()]);
        }
        GCharTable gt2 = build_g_char_table_with_delta(T, N, delta2);
        CliffordData cd2 = clifford_oracle(gt2);
        if (gt2.cells != v.gt.cells)
            throw PathDisagreement("cells changed under an alternative representative system");
        for (int i = 0; i < gt2.k(); ++i)
            if (relation_B(gt2, i) != v.B[i])
                throw PathDisagreement("relation B changed under an alternative representatives");
        if (lin_g(gt2, cd2) != lin)
            throw PathDisagreement("linear cells changed under alternative representatives");
        if (min_chars(gt2, cd2) != en.mcd)
            throw PathDisagreement("Mcd changed under alternative representatives");
        if (leader_degs(gt2, cd2) != en.lcd)
            throw PathDisagreement("Lcd changed under alternative representatives");
        if (commutator_from_table(gt2).elems != comm.elems)
            throw PathDisagreement("[N,G] changed under alternative representatives");
        checks += 6;

        entries.push_back(std::move(en));
    }

    if (opt.json) {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "verify";
        j["fixture"] = fx.name;
        j["meta"] = meta_json(fx);
        j["group"] = group_json(*G, T.get());
        ordered_json tbl;
        tbl["rows"] = T->rows();
        tbl["orthogonality"] = "ok";
        tbl["roundtrip_values"] = rt;
        tbl["determinant_orders"] = "ok";
        j["table"] = tbl;
        j["p_element_primes"] = gprimes;
        j["nmi"] = state_json(nmi.state);
        j["nmi_structure"] = state_json(nmis.state);
        ordered_json list = ordered_json::array();
        for (const Entry& en : entries) {
            ordered_json e;
            e["index"] = en.index;
            e["order"] = en.order;
            e["k"] = en.k;
            e["lambda"] = en.lambda;
            e["A"] = en.A;
            e["B"] = en.B;
            e["lin"] = en.lin;
            e["mcd"] = en.mcd;
            e["lcd"] = en.lcd;
            e["commutator_order"] = en.comm_order;
            e["nilpotent"] = state_json(en.nilp.state);
            e["solvable"] = state_json(en.solv.state);
            e["fratt"] = state_json(en.fratt.state);
            e["taketa"] = state_json(en.taketa.state);
            e["gnmi"] = state_json(en.gnmi.state);
            ordered_json primes = ordered_json::array();
            for (size_t t = 0; t < en.thompson.size(); ++t) {
                ordered_json pe;
                pe["p"] = en.thompson[t].first;
                pe["s_value"] = en.s_values[t].second;
                pe["s_congruence"] = "ok";
                pe["thompson"] = state_json(en.thompson[t].second.state);
                primes.push_back(pe);
            }
            e["primes"] = primes;
            e["delta_invariance"] = "ok";
            list.push_back(e);
        }
        j["normals"] = list;
        j["checks"] = checks;
        j["result"] = "ok";
        return dump(j);
    }

    std::ostringstream out;
    out << "fixture: " << fx.name << '\n';
    for (const auto& kv : fx.meta) out << "meta: " << kv.first << ' ' << kv.second << '\n';
    out << group_header(*G, T.get());
    out << "table: orthogonality ok  round-trip ok (" << rt << " values)  determinant-orders ok\n";
    out << "p-elements: ok for p in {" << join_longs(gprimes) << "}\n";
    out << "nmi: " << state_text(nmi.state) << '\n';
    out << "nmi-structure: " << state_text(nmis.state) << '\n';
    out << "normal subgroups: " << ns.size() << '\n';
    for (const Entry& en : entries) {
        out << "N " << en.index << "  order " << en.order << "  k " << en.k << "  lambda {"
            << join_longs(en.lambda) << "}  lin " << en.lin << "  mcd {" << join_longs(en.mcd)
            << "}  lcd {" << join_longs(en.lcd) << "}  [N,G] " << en.comm_order << "  nilpotent "
            << state_text(en.nilp.state) << "  solvable " << state_text(en.solv.state)
            << "  fratt " << state_text(en.fratt.state) << "  taketa "
            << state_text(en.taketa.state) << "  gnmi " << state_text(en.gnmi.state);
        out << "  primes:";
        if (en.thompson.empty()) out << " -";
        for (size_t t = 0; t < en.thompson.size(); ++t)
            out << " " << en.thompson[t].first << "[s " << en.s_values[t].second << " thompson "
                << state_text(en.thompson[t].second.state) << "]";
        out << "  delta ok\n";
    }
    out << "verify: ok  checks " << checks << '\n';
    return out.str();
}

}  // namespace gct
