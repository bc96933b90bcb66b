#include "nulldecomp/property_suite.hpp"

#include <algorithm>

#include "nulldecomp/decomposition.hpp"
#include "nulldecomp/exact_linalg.hpp"
#include "nulldecomp/generator.hpp"
#include "nulldecomp/matching.hpp"
#include "nulldecomp/null_basis.hpp"
#include "nulldecomp/oracles.hpp"
#include "nulldecomp/validate.hpp"

namespace nulldecomp {

namespace {

VertexSet set_of(const std::vector<int>& v) { return VertexSet(v.begin(), v.end()); }

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out;
    for (int v : s)
        for (int w : g.neighbors(v)) out.insert(w);
    return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        for (int w : g.neighbors(v))
            if (s.count(w)) return false;
    return true;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    return std::none_of(a.begin(), a.end(), [&](int v) { return b.count(v) > 0; });
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    for (int v : a)
        if (b.count(v)) out.insert(v);
    return out;
}

// Greedy maximal (M,x)-alternating walk from a saturated start vertex,
// choosing the smallest eligible neighbor at each odd position.
std::vector<int> grow_alternating_walk(const Graph& g, const Matching& m,
                                       const RationalVector& x, int start) {
    std::vector<int> walk{start};
    while (walk.size() <= 2 * g.vertex_count() + 2) {
        int even_pos = walk.back();
        if (!m.saturates(even_pos)) break;  // cannot take the required matching edge
        walk.push_back(m.partner(even_pos));
        int odd_pos = walk.back();
        int next = -1;
        for (int w : g.neighbors(odd_pos)) {
            if (sgn(x.at(even_pos)) * sgn(x.at(w)) < 0) {
                next = w;
                break;
            }
        }
        if (next < 0) break;  // cannot happen when x ∈ Null(G); walk would be odd
        walk.push_back(next);
    }
    return walk;
}

struct Suite {
    std::vector<CheckResult> results{};

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        results.push_back({name, pass, detail});
    }

    template <typename F>
    void guarded(const std::string& name, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            add(name, false, std::string("exception: ") + e.what());
        }
    }
};

}  // namespace

std::vector<CheckResult> run_property_suite(const Graph& g, int budget) {
    Suite s;
    const long long n = static_cast<long long>(g.vertex_count());

    // graph_core invariants
    s.guarded("serialize/parse round-trip", [&] {
        s.add("serialize/parse round-trip", parse_edge_list(serialize_edge_list(g)) == g);
    });
    s.guarded("components partition V(G)", [&] {
        VertexSet seen;
        std::size_t total = 0;
        for (const auto& comp : connected_components(g)) {
            for (int v : comp.vertices()) seen.insert(v);
            total += comp.vertex_count();
        }
        s.add("components partition V(G)",
              total == g.vertex_count() && seen == set_of(g.vertices()));
    });

    auto vr = check_c4kfree_bipartite(g);
    if (!is_certified(vr)) {
        s.add("instance certified", false, "validator did not certify the instance");
        return s.results;
    }
    const Certificate& cert = std::get<Certificate>(vr);
    s.add("instance certified", true);
    {
        bool all_cross = true;
        for (auto e : g.edges()) all_cross = all_cross && edge_crosses(cert.sides, e);
        s.add("bipartition: every edge crosses sides", all_cross);
        bool even_cycles = std::all_of(cert.cycle_lengths.begin(), cert.cycle_lengths.end(),
                                       [](int l) { return l % 2 == 0; });
        s.add("bipartite graph has even cycles only", even_cycles);
    }

    Matching m = maximum_matching(g, cert.sides);
    const long long nu = static_cast<long long>(m.size());
    VertexSet u = unsaturated(g, m);
    s.add("no augmenting path", !has_augmenting_path(g, m));
    s.add("|U(M)| = |V| - 2 nu", static_cast<long long>(u.size()) == n - 2 * nu);

    // single-source reach-set laws, all five, for every v in U(M)
    {
        bool i1 = true, i2 = true, i3 = true, i4 = true, i5 = true;
        for (int v : u) {
            ReachSets r = alternating_reach(g, m, {v});
            i1 = i1 && disjoint(r.even, r.odd);
            i2 = i2 && disjoint(r.odd, u);
            i3 = i3 && r.even.size() == r.odd.size() + 1;
            for (int w : neighborhood(g, r.even))
                i4 = i4 && r.odd.count(w) > 0;
            i5 = i5 && is_independent(g, r.even) && is_independent(g, r.odd);
        }
        s.add("reach sets: R_e and R_o disjoint", i1);
        s.add("reach sets: R_o avoids U(M)", i2);
        s.add("reach sets: |R_e| = |R_o| + 1", i3);
        s.add("reach sets: N(R_e) inside R_o", i4);
        s.add("reach sets: R_e, R_o independent", i5);
    }

    NullDecomposition d = null_decomposition(g, m);
    const long long sc = static_cast<long long>(d.supp.size());
    const long long cc = static_cast<long long>(d.core.size());
    const long long np = static_cast<long long>(d.npart.size());
    s.add("supp/core/npart partition V(G)", sc + cc + np == n &&
                                                disjoint(d.supp, d.core) &&
                                                disjoint(d.supp, d.npart) &&
                                                disjoint(d.core, d.npart));
    s.add("core = N(supp)", neighborhood(g, d.supp) == d.core);
    s.add("supp is independent", is_independent(g, d.supp));

    // matching-independence: retargeting onto each support vertex must not move the sets
    s.guarded("decomposition independent of the maximum matching", [&] {
        bool same = true;
        for (int v : d.supp) {
            Matching m2 = retarget_matching(g, m, v);
            same = same && m2.size() == m.size() && !m2.saturates(v);
            NullDecomposition d2 = null_decomposition(g, m2);
            same = same && d2.supp == d.supp && d2.core == d.core && d2.npart == d.npart;
        }
        s.add("decomposition independent of the maximum matching", same);
    });

    // idempotence of the decomposition on its own subgraphs
    s.guarded("decomposing C_S/C_N is idempotent", [&] {
        auto bp_cs = std::get<Bipartition>(bipartition(d.c_s));
        NullDecomposition dcs = null_decomposition(d.c_s, maximum_matching(d.c_s, bp_cs));
        auto bp_cn = std::get<Bipartition>(bipartition(d.c_n));
        NullDecomposition dcn = null_decomposition(d.c_n, maximum_matching(d.c_n, bp_cn));
        s.add("decomposing C_S/C_N is idempotent",
              dcs.supp == d.supp && dcs.core == d.core && dcs.npart.empty() &&
                  dcn.supp.empty() && dcn.core.empty() && dcn.npart == d.npart);
    });

    // per-component restriction of supp/core
    s.guarded("per-component supp/core restriction", [&] {
        bool ok = true;
        for (const auto& comp : d.s_components) {
            auto bp_h = std::get<Bipartition>(bipartition(comp));
            NullDecomposition dh = null_decomposition(comp, maximum_matching(comp, bp_h));
            ok = ok && dh.supp == intersect(d.supp, set_of(comp.vertices())) &&
                 dh.core == intersect(d.core, set_of(comp.vertices()));
        }
        s.add("per-component supp/core restriction", ok);
    });

    // matching split across the decomposition
    {
        std::vector<Edge> in_cs, in_cn;
        bool no_core_npart_edge = true;
        for (auto [a, b] : m.edges()) {
            if (d.c_s.has_edge(a, b)) in_cs.emplace_back(a, b);
            else if (d.c_n.has_edge(a, b)) in_cn.emplace_back(a, b);
            else no_core_npart_edge = false;
        }
        s.add("no matching edge joins core to npart", no_core_npart_edge);
        s.guarded("matching splits into max(C_S) + perfect(C_N)", [&] {
            Matching mcs = Matching::from_edges(d.c_s, in_cs);
            Matching mcn = Matching::from_edges(d.c_n, in_cn);
            bool cs_max = !has_augmenting_path(d.c_s, mcs);
            bool cn_perfect = 2 * mcn.size() == d.c_n.vertex_count();
            s.add("matching splits into max(C_S) + perfect(C_N)", cs_max && cn_perfect);
        });
        bool core_to_supp = true;
        for (int v : d.core) core_to_supp = core_to_supp && d.supp.count(m.partner(v));
        s.add("M(core) inside supp", core_to_supp);
        bool npart_closed = true;
        for (int v : d.npart) npart_closed = npart_closed && d.npart.count(m.partner(v));
        s.add("M(npart) = npart", npart_closed);
    }

    // Hall-type bound over subsets of core
    s.guarded("Hall bound |U| <= |N(U) ∩ supp| on core subsets", [&] {
        std::vector<int> core_list(d.core.begin(), d.core.end());
        bool ok = true;
        auto check_subset = [&](std::uint64_t mask) {
            VertexSet sub;
            for (std::size_t i = 0; i < core_list.size(); ++i)
                if (mask & (1ULL << i)) sub.insert(core_list[i]);
            VertexSet nbrs = intersect(neighborhood(g, sub), d.supp);
            return sub.size() <= nbrs.size();
        };
        if (core_list.size() <= 16) {
            for (std::uint64_t mask = 0; mask < (1ULL << core_list.size()); ++mask)
                ok = ok && check_subset(mask);
        } else {
            SplitMix64 rng(0x48414C4Cu ^ g.vertex_count());
            for (int trial = 0; trial < 256; ++trial)
                ok = ok && check_subset(rng.next() &
                                        ((1ULL << std::min<std::size_t>(core_list.size(), 63)) - 1));
        }
        s.add("Hall bound |U| <= |N(U) ∩ supp| on core subsets", ok);
    });

    // exact algebraic agreement
    RationalMatrix a = adjacency_matrix(g, g.vertices());
    const int exact_rank = rank(a);
    auto algebraic_basis = nullspace_basis(a);
    s.add("exact rank = 2 nu", exact_rank == 2 * nu);
    s.add("exact nullity = |U(M)|",
          algebraic_basis.size() == u.size() &&
              static_cast<long long>(algebraic_basis.size()) == sc - cc);
    {
        VertexSet algebraic_supp;
        for (const auto& vec : algebraic_basis)
            for (int l : vec.support()) algebraic_supp.insert(l);
        s.add("algebraic supp = combinatorial supp", algebraic_supp == d.supp);
    }
    s.guarded("inertia = (nu, nullity, nu)", [&] {
        std::array<long long, 3> expected{nu, sc - cc, nu};
        s.add("inertia = (nu, nullity, nu)", inertia_algebraic(a) == expected);
    });
    s.guarded("rank additive across C_S, C_N and components", [&] {
        int rank_cs = rank(adjacency_matrix(d.c_s, d.c_s.vertices()));
        int rank_cn = rank(adjacency_matrix(d.c_n, d.c_n.vertices()));
        int comp_sum = 0;
        for (const auto& comp : d.s_components)
            comp_sum += rank(adjacency_matrix(comp, comp.vertices()));
        for (const auto& comp : d.n_components)
            comp_sum += rank(adjacency_matrix(comp, comp.vertices()));
        s.add("rank additive across C_S, C_N and components",
              rank_cs + rank_cn == exact_rank && comp_sum == exact_rank);
    });
    s.guarded("column spaces of C_S and C_N sum directly", [&] {
        // lifted columns of A(C_S) and A(C_N), assembled over V(G)
        std::vector<RationalVector> cols;
        for (const Graph* part : {&d.c_s, &d.c_n}) {
            auto verts = part->vertices();
            for (int col_v : verts) {
                RationalVector col(g.vertices());
                for (int row_v : verts)
                    if (part->has_edge(row_v, col_v)) col.set(row_v, 1);
                cols.push_back(col);
            }
        }
        std::vector<int> col_ids(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) col_ids[i] = static_cast<int>(i);
        RationalMatrix stacked(g.vertices(), col_ids);
        for (int i = 0; i < stacked.rows(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j)
                stacked.at(i, static_cast<int>(j)) = cols[j].at(g.vertices()[i]);
        s.add("column spaces of C_S and C_N sum directly", rank(stacked) == exact_rank);
    });

    // perfect-matching characterization
    s.add("perfect matching iff nonsingular iff G = C_N",
          (u.empty() == (exact_rank == n)) && (u.empty() == (np == n)));

    // constructed null basis
    s.guarded("constructed basis checks", [&] {
        NullBasis nb = null_basis(g, m);
        s.add("constructed basis size = nullity",
              nb.vectors.size() == algebraic_basis.size());
        bool anchors_ok = true, support_ok = true;
        VertexSet support_union;
        for (std::size_t i = 0; i < nb.vectors.size(); ++i) {
            const auto& z = nb.vectors[i];
            anchors_ok = anchors_ok && z.at(nb.anchors[i]) == -1;
            for (std::size_t j = 0; j < nb.anchors.size(); ++j)
                if (j != i) anchors_ok = anchors_ok && z.at(nb.anchors[j]) == 0;
            VertexSet sup = z.support();
            for (int l : sup) {
                support_union.insert(l);
                support_ok = support_ok && d.supp.count(l) > 0;
            }
        }
        s.add("anchor submatrix is -identity", anchors_ok);
        s.add("constructed vectors vanish off supp", support_ok);
        s.add("union of constructed supports = supp", support_union == d.supp);
        bool mutual = true;
        for (const auto& z : nb.vectors) mutual = mutual && in_span(algebraic_basis, z);
        for (const auto& v : algebraic_basis) mutual = mutual && in_span(nb.vectors, v);
        s.add("constructed and algebraic bases span the same space", mutual);

        // lift/restrict laws: Null(G) is the lift of Null(C_S), componentwise
        auto cs_basis = nullspace_basis(adjacency_matrix(d.c_s, d.c_s.vertices()));
        bool lift_ok = cs_basis.size() == algebraic_basis.size();
        for (const auto& y : cs_basis) {
            RationalVector lifted = lift_to(y, g);
            lift_ok = lift_ok && in_span(algebraic_basis, lifted);
        }
        s.add("Null(G) = lift of Null(C_S)", lift_ok);
        bool component_blocks = true;
        for (std::size_t i = 0; i < nb.vectors.size(); ++i) {
            const Graph* home = nullptr;
            for (const auto& comp : d.s_components)
                if (comp.has_vertex(nb.anchors[i])) home = &comp;
            VertexSet comp_verts =
                home ? set_of(home->vertices()) : VertexSet{nb.anchors[i]};
            for (int l : nb.vectors[i].support())
                component_blocks = component_blocks && comp_verts.count(l) > 0;
        }
        s.add("constructed vectors live in their anchor's component", component_blocks);

        // alternating-walk laws on the constructed vectors
        bool walks_ok = true;
        for (const auto& z : nb.vectors) {
            for (int start : z.support()) {
                if (!m.saturates(start)) continue;
                std::vector<int> walk = grow_alternating_walk(g, m, z, start);
                VertexSet distinct(walk.begin(), walk.end());
                bool is_path = distinct.size() == walk.size();
                bool even_len = (walk.size() - 1) % 2 == 0;
                int end = walk.back();
                walks_ok = walks_ok && is_path && even_len && u.count(end) &&
                           d.supp.count(end);
            }
        }
        s.add("maximal alternating walks are even paths into U(M) ∩ supp", walks_ok);
    });

    // independence-side invariants
    s.guarded("alpha and independent-set structure", [&] {
        bool cn_sides_ok = true;
        for (const auto& comp : d.n_components) {
            auto bp_h = std::get<Bipartition>(bipartition(comp));
            auto mis = oracle::enumerate_max_independent_sets(comp, budget);
            std::size_t half = comp.vertex_count() / 2;
            cn_sides_ok = cn_sides_ok && !mis.empty() && mis.front().size() == half &&
                          bp_h.side_x.size() == half && bp_h.side_y.size() == half;
            auto found_x = std::find(mis.begin(), mis.end(), bp_h.side_x) != mis.end();
            auto found_y = std::find(mis.begin(), mis.end(), bp_h.side_y) != mis.end();
            cn_sides_ok = cn_sides_ok && found_x && found_y;
        }
        s.add("alpha(C_N) = npart/2 with both sides maximum", cn_sides_ok);

        if (n <= budget) {
            auto mis = oracle::enumerate_max_independent_sets(g, budget);
            long long alpha =
                mis.empty() ? 0 : static_cast<long long>(mis.front().size());
            s.add("alpha = supp + npart/2", alpha == sc + np / 2);
            s.add("alpha = nullity + nu", alpha == (sc - cc) + nu);
            bool split_ok = true;
            for (const auto& i_set : mis) {
                split_ok = split_ok && intersect(i_set, d.supp) == d.supp &&
                           intersect(i_set, d.core).empty() &&
                           intersect(i_set, d.npart).size() ==
                               static_cast<std::size_t>(np / 2);
            }
            s.add("every maximum independent set = supp + half of each C_N side",
                  split_ok);
        }
    });

    // three-way equivalence with the independent oracles
    s.guarded("zito = gallai-edmonds = null decomposition", [&] {
        if (n > budget) return;
        auto zito = oracle::zito_decomposition(g, budget);
        auto ge = oracle::gallai_edmonds_decomposition(g, budget);
        auto ns = oracle::nullspace_decomposition_general(g);
        bool agree = zito.always == d.supp && zito.never == d.core &&
                     zito.sometimes == d.npart && ge.always == d.supp &&
                     ge.never == d.core && ge.sometimes == d.npart &&
                     ns.always == d.supp && ns.never == d.core &&
                     ns.sometimes == d.npart && ns.overlap.empty();
        s.add("zito = gallai-edmonds = null decomposition", agree);
    });

    // counting formulas against full oracle enumeration
    s.guarded("m(G) and a(G) product formulas match enumeration", [&] {
        if (n > budget) return;
        Options opts;
        opts.unchecked = true;
        opts.budget = budget;
        mpz_class m_formula = count_maximum_matchings(g, opts);
        mpz_class a_formula = count_maximum_independent_sets(g, opts);
        auto all_matchings = oracle::enumerate_maximum_matchings(g, budget);
        auto all_mis = oracle::enumerate_max_independent_sets(g, budget);
        s.add("m(G) product formula matches enumeration",
              m_formula == static_cast<long>(all_matchings.size()));
        s.add("a(G) product formula matches enumeration",
              a_formula == static_cast<long>(all_mis.size()));
        bool all_max = true;
        for (const auto& mm : all_matchings)
            all_max = all_max && static_cast<long long>(mm.size()) == nu;
        s.add("every enumerated maximum matching has size nu", all_max);
    });

    // stability under deleting an npart vertex with its partner
    s.guarded("stability: delete v + M(v) for every npart vertex", [&] {
        bool ok = true;
        for (int v : d.npart) {
            Graph g2 = delete_vertices(g, {v, m.partner(v)});
            auto bp2 = bipartition(g2);
            Matching m2 = maximum_matching(g2, std::get<Bipartition>(bp2));
            RationalMatrix a2 = adjacency_matrix(g2, g2.vertices());
            int rank2 = rank(a2);
            long long n2 = static_cast<long long>(g2.vertex_count());
            ok = ok && static_cast<long long>(m2.size()) == nu - 1 &&
                 rank2 == exact_rank - 2 && (n2 - rank2) == (n - exact_rank);
        }
        s.add("stability: delete v + M(v) for every npart vertex", ok);
    });

    return s.results;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.pass; });
}

std::vector<std::string> failed_names(const std::vector<CheckResult>& results) {
    std::vector<std::string> out;
    for (const auto& r : results)
        if (!r.pass) out.push_back(r.name);
    return out;
}

}  // namespace nulldecomp
