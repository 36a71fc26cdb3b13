#include "graphmetrics/center.hpp"

#include <algorithm>

namespace gm {

namespace {

DistanceProfile single_source(const Graph& g, Vertex v, PassCounter* passes) {
    return distance_profile(g, std::span<const Vertex>(&v, 1), passes);
}

Error bad_input(const std::string& why) {
    return Error(Errc::not_half_hyperbolic, "input not 1/2-hyperbolic: " + why);
}

} // namespace

const char* to_string(EccClass c) {
    switch (c) {
    case EccClass::at_most_r: return "AtMostR";
    case EccClass::exactly_r_plus_1: return "ExactlyRPlus1";
    case EccClass::at_least_2r: return "AtLeast2R";
    }
    return "?";
}

MutuallyDistantPair mutually_distant_pair(const Graph& g, PassCounter* passes) {
    MutuallyDistantPair out;
    Vertex x = 0;
    DistanceProfile px = single_source(g, x, passes);
    for (;;) {
        ++out.iterations;
        Vertex y = px.far_set.front();
        DistanceProfile py = single_source(g, y, passes);
        if (py.ecc <= px.ecc) {
            // ecc(y) >= d(x,y) = ecc(x) always, so this is an equality
            // and the pair is mutually distant.
            out.u = x;
            out.v = y;
            out.distance = px.ecc;
            out.from_u = std::move(px);
            out.from_v = std::move(py);
            return out;
        }
        x = y;
        px = std::move(py);
    }
}

namespace {

struct CliqueState {
    VertexList k;                    // current clique, sorted
    std::vector<std::int32_t> dist;  // d(., K)
    std::int32_t r = 0;              // ecc(K) - 1, fixed across the restriction
    VertexList far;                  // F(K), kept across the restriction
};

ProcessCliqueOutcome finalize(const Graph& g, Vertex a, EccClass cls, PassCounter* passes) {
    DistanceProfile da = single_source(g, a, passes);
    return {a, cls, da.ecc, da.far_set.front()};
}

ProcessCliqueOutcome finalize_known(Vertex a, EccClass cls, const DistanceProfile& da) {
    return {a, cls, da.ecc, da.far_set.front()};
}

} // namespace

ProcessCliqueOutcome process_clique(const Graph& g, std::span<const Vertex> k_clique, PassCounter* passes,
                                    const DistanceProfile* from_k, bool check_preconditions) {
    const Vertex n = g.vertex_count();
    CliqueState st;
    st.k.assign(k_clique.begin(), k_clique.end());
    std::sort(st.k.begin(), st.k.end());
    st.k.erase(std::unique(st.k.begin(), st.k.end()), st.k.end());
    require_clique(g, st.k);

    DistanceProfile base;
    if (from_k && from_k->source == st.k) {
        st.dist = from_k->dist;
        st.r = from_k->ecc - 1;
        st.far = from_k->far_set;
    } else {
        base = distance_profile(g, st.k, passes);
        st.dist = base.dist;
        st.r = base.ecc - 1;
        st.far = base.far_set;
    }
    if (st.r + 1 < 3)
        throw Error(Errc::precondition,
                    "process-clique requires clique eccentricity >= 3, got " + std::to_string(st.r + 1));
    if (check_preconditions) {
        for (Vertex w : st.k) {
            auto dw = single_source(g, w, nullptr); // oracle-mode assert, uncharged
            if (dw.ecc != st.r + 1)
                throw Error(Errc::precondition, "clique vertex " + std::to_string(w) +
                                                    " has eccentricity " + std::to_string(dw.ecc) +
                                                    ", expected " + std::to_string(st.r + 1));
        }
    }
    const std::int32_t r = st.r;

    // Stage 1: make every vertex outside F(K) lie within distance r of the
    // whole clique, by shrinking K to the vertices shadowing the entire
    // distance-r layer, or bail out with a provably far vertex.
    VertexList f_prime;
    for (Vertex z = 0; z < n; ++z)
        if (st.dist[z] == r)
            f_prime.push_back(z);
    if (!f_prime.empty()) {
        auto psi = clique_shadows(g, st.k, f_prime, passes, &st.dist);
        auto max_it = std::max_element(psi.begin(), psi.end());
        Vertex w0 = st.k[static_cast<std::size_t>(max_it - psi.begin())];
        if (*max_it < static_cast<std::int32_t>(f_prime.size())) {
            DistanceProfile dw0 = single_source(g, w0, passes);
            for (Vertex z : f_prime)
                if (dw0.dist[z] > r)
                    return finalize(g, z, EccClass::at_least_2r, passes);
            throw bad_input("shadow count disagrees with the distance-r layer");
        }
        VertexList restricted;
        for (std::size_t i = 0; i < st.k.size(); ++i)
            if (psi[i] == static_cast<std::int32_t>(f_prime.size()))
                restricted.push_back(st.k[i]);
        if (restricted.size() != st.k.size()) {
            st.k = std::move(restricted);
            // r and F(K) carry over; only the ball structure is refreshed.
            st.dist = distance_profile(g, st.k, passes).dist;
        }
    }

    // Stage 2: outergates of the far vertices with respect to B_2(K).
    VertexList ball2;
    for (Vertex z = 0; z < n; ++z)
        if (st.dist[z] <= 2)
            ball2.push_back(z);
    OutergateAssignment og = outergate_candidates(g, ball2, passes);

    VertexList m_list;
    std::vector<char> in_m(static_cast<std::size_t>(n), 0);
    for (Vertex x : st.far) {
        Vertex gx = og.candidate[x];
        if (gx < 0)
            throw bad_input("far vertex " + std::to_string(x) + " lies inside B_2(K)");
        if (!in_m[gx]) {
            in_m[gx] = 1;
            m_list.push_back(gx);
        }
    }
    std::sort(m_list.begin(), m_list.end());

    Vertex x0 = st.far.front();
    int scans = 0;
    for (;;) {
        if (++scans > 2)
            throw bad_input("far pivot replaced twice");
        const Vertex gx0 = og.candidate[x0];
        DistanceProfile d_g = single_source(g, gx0, passes);

        // Diameter-of-M split, driven from gx0's side only.
        std::int32_t dmax = 0;
        Vertex ymax = -1;
        for (Vertex y : m_list)
            if (d_g.dist[y] > dmax) {
                dmax = d_g.dist[y];
                ymax = y;
            }
        if (dmax >= 5)
            return finalize(g, st.k.front(), EccClass::exactly_r_plus_1, passes);
        if (dmax == 4) {
            DistanceProfile d_y = single_source(g, ymax, passes);
            VertexList mid;
            for (Vertex w = 0; w < n; ++w)
                if (d_g.dist[w] == 2 && d_y.dist[w] == 2)
                    mid.push_back(w);
            if (mid.empty() || !is_clique(g, mid))
                throw bad_input("middle slice of a distant outergate pair is not a clique");
            CliqueEccentricities ce = clique_eccentricities(g, mid, passes);
            auto best = std::min_element(ce.ecc.begin(), ce.ecc.end());
            Vertex b = ce.clique[static_cast<std::size_t>(best - ce.ecc.begin())];
            if (*best <= r)
                return finalize(g, b, EccClass::at_most_r, passes);
            return finalize(g, st.k.front(), EccClass::exactly_r_plus_1, passes);
        }

        // All outergates within distance 3 of gx0.
        VertexList proj;
        for (Vertex s : g.neighbors(gx0))
            if (st.dist[s] == 2)
                proj.push_back(s);
        if (proj.empty())
            throw bad_input("projection of the far pivot on B_2(K) is empty");
        if (!is_clique(g, proj))
            throw bad_input("projection of the far pivot on B_2(K) is not a clique");

        DistanceProfile d_proj = distance_profile(g, proj, passes);
        VertexList m0;
        for (Vertex y : m_list)
            if (d_proj.dist[y] <= 2)
                m0.push_back(y);

        auto phi = clique_potentials(g, proj, m_list, 2, passes, &d_proj.dist);
        std::int32_t phi_max = *std::max_element(phi.begin(), phi.end());
        VertexList ell;
        for (std::size_t i = 0; i < proj.size(); ++i)
            if (phi[i] == phi_max)
                ell.push_back(proj[i]);

        Vertex s0 = ell.front();
        DistanceProfile d_s0 = single_source(g, s0, passes);
        bool missed = false;
        for (Vertex y : m0)
            if (d_s0.dist[y] > 2) {
                missed = true;
                break;
            }
        if (missed) {
            Vertex next = -1;
            for (Vertex x : st.far) {
                Vertex gx = og.candidate[x];
                if (d_proj.dist[gx] <= 2 && d_s0.dist[gx] > 2) {
                    next = x;
                    break;
                }
            }
            if (next < 0)
                throw bad_input("no replacement pivot despite a missed outergate");
            x0 = next;
            continue;
        }

        DistanceProfile d_ell = distance_profile(g, ell, passes);
        if (d_ell.ecc < r)
            return finalize(g, ell.front(), EccClass::at_most_r, passes);
        if (d_ell.ecc == r) {
            auto psi_l = clique_shadows(g, ell, d_ell.far_set, passes, &d_ell.dist);
            auto max_it = std::max_element(psi_l.begin(), psi_l.end());
            Vertex s_best = ell[static_cast<std::size_t>(max_it - psi_l.begin())];
            DistanceProfile d_best = single_source(g, s_best, passes);
            if (d_best.ecc == r)
                return finalize_known(s_best, EccClass::at_most_r, d_best);
            return finalize(g, d_best.far_set.front(), EccClass::at_least_2r, passes);
        }

        // ecc(L) >= r+1
        Vertex z_l = d_ell.far_set.front();
        std::vector<char> near_ell(static_cast<std::size_t>(n), 0);
        for (Vertex s : ell)
            for (Vertex y : g.neighbors(s))
                near_ell[y] = 1;
        for (Vertex s : ell)
            near_ell[s] = 0;

        DistanceProfile d_z = single_source(g, z_l, passes);
        Vertex c_l = -1;
        for (Vertex y = 0; y < n; ++y)
            if (near_ell[y] && st.dist[y] == 1 && d_z.dist[y] <= r) {
                c_l = y;
                break;
            }
        if (c_l < 0)
            return finalize(g, st.k.front(), EccClass::exactly_r_plus_1, passes);

        DistanceProfile d_c = single_source(g, c_l, passes);
        for (Vertex y : m0)
            if (d_c.dist[y] > 2)
                return finalize_known(z_l, EccClass::at_least_2r, d_z);

        Vertex w_l = -1;
        for (Vertex w : g.neighbors(c_l))
            if (st.dist[w] == 0) {
                w_l = w;
                break;
            }
        if (w_l < 0)
            throw bad_input("bridge vertex has no clique neighbour");

        DistanceProfile d_x0 = single_source(g, x0, passes);
        VertexList w_slice;
        for (Vertex s : g.neighbors(w_l))
            if (d_x0.dist[s] == d_x0.dist[w_l] - 1)
                w_slice.push_back(s);
        if (w_slice.empty())
            throw bad_input("slice toward the far pivot is empty");
        if (!is_clique(g, w_slice))
            throw bad_input("slice toward the far pivot is not a clique");

        auto phi_w = clique_potentials(g, w_slice, m_list, 2, passes);
        auto best_it = std::max_element(phi_w.begin(), phi_w.end());
        Vertex v_l = w_slice[static_cast<std::size_t>(best_it - phi_w.begin())];
        DistanceProfile d_v = single_source(g, v_l, passes);

        bool covers_m = true;
        for (Vertex y : m_list)
            if (d_v.dist[y] > 2) {
                covers_m = false;
                break;
            }
        if (!covers_m) {
            Vertex next = -1;
            for (Vertex x : st.far)
                if (d_v.dist[og.candidate[x]] > 2) {
                    next = x;
                    break;
                }
            if (next < 0)
                throw bad_input("no replacement pivot despite an uncovered outergate");
            x0 = next;
            continue;
        }
        if (d_v.ecc <= r)
            return finalize_known(v_l, EccClass::at_most_r, d_v);
        return finalize(g, d_v.far_set.front(), EccClass::at_least_2r, passes);
    }
}

CenterReport compute_center(const Graph& g, const CenterOptions& options) {
    PassCounter pc;
    pc.budget = options.pass_budget;

    CenterReport report;
    auto done = [&](Vertex c, std::int32_t radius) {
        report.center = c;
        report.radius = radius;
        report.bfs_passes = pc.used;
        return report;
    };

    MutuallyDistantPair pair = mutually_distant_pair(g, &pc);
    Vertex u = pair.u;
    Vertex v = pair.v;
    DistanceProfile du = std::move(pair.from_u);
    DistanceProfile dv = std::move(pair.from_v);

    auto upgrade_pair = [&](Vertex new_u) {
        report.phases.emplace_back("pair-upgrade");
        if (++report.pair_upgrades > options.max_pair_upgrades)
            throw bad_input("more than " + std::to_string(options.max_pair_upgrades) + " pair upgrades");
        u = new_u;
        du = single_source(g, u, &pc);
        v = du.far_set.front();
        dv = single_source(g, v, &pc);
    };

    for (;;) {
        const std::int32_t d = du.dist[v];
        const std::int32_t r = (d + 1) / 2;

        if (d % 2 == 0) {
            report.phases.emplace_back("even-case");
            if (d == 0)
                return done(u, 0);
            VertexList mid;
            for (Vertex w = 0; w < g.vertex_count(); ++w)
                if (du.dist[w] == r && dv.dist[w] == d - r)
                    mid.push_back(w);
            if (!is_clique(g, mid))
                throw bad_input("middle slice is not a clique");
            CliqueEccentricities ce = clique_eccentricities(g, mid, &pc);
            auto best = std::min_element(ce.ecc.begin(), ce.ecc.end());
            return done(ce.clique[static_cast<std::size_t>(best - ce.ecc.begin())], *best);
        }

        // odd: d = 2r-1
        if (r == 1) {
            report.phases.emplace_back("odd-slice-1");
            return done(u, 1); // u is universal here
        }

        bool upgraded = false;
        for (int side = 0; side < 2 && !upgraded; ++side) {
            report.phases.emplace_back(side == 0 ? "odd-slice-1" : "odd-slice-2");
            const std::int32_t level = side == 0 ? r - 1 : r;
            VertexList k_slice;
            for (Vertex w = 0; w < g.vertex_count(); ++w)
                if (du.dist[w] == level && dv.dist[w] == d - level)
                    k_slice.push_back(w);
            if (!is_clique(g, k_slice))
                throw bad_input("middle slice is not a clique");

            DistanceProfile from_k = distance_profile(g, k_slice, &pc);
            if (from_k.ecc == r) {
                auto psi = clique_shadows(g, k_slice, from_k.far_set, &pc, &from_k.dist);
                auto max_it = std::max_element(psi.begin(), psi.end());
                Vertex c = k_slice[static_cast<std::size_t>(max_it - psi.begin())];
                DistanceProfile dc = single_source(g, c, &pc);
                if (dc.ecc == r)
                    return done(c, r);
                upgrade_pair(dc.far_set.front());
                upgraded = true;
            } else if (from_k.ecc == r + 1) {
                ProcessCliqueOutcome out =
                    process_clique(g, k_slice, &pc, &from_k, options.check_preconditions);
                if (out.ecc <= r)
                    return done(out.vertex, out.ecc);
                if (out.ecc >= 2 * r) {
                    upgrade_pair(out.vertex);
                    upgraded = true;
                } else if (side == 1) {
                    // Neither slice neighbourhood holds a vertex of
                    // eccentricity r, so the radius is r+1.
                    return done(out.vertex, out.ecc);
                }
            } else {
                throw bad_input("slice eccentricity " + std::to_string(from_k.ecc) +
                                " outside {r, r+1} for r = " + std::to_string(r));
            }
        }
    }
}

BruteForceCenter brute_force_center(const Graph& g, Vertex max_n) {
    const Vertex n = g.vertex_count();
    if (n > max_n)
        throw Error(Errc::too_large,
                    "oracle cap exceeded: n = " + std::to_string(n) + " > " + std::to_string(max_n));
    BruteForceCenter out;
    out.ecc.resize(static_cast<std::size_t>(n));
    out.radius = std::numeric_limits<std::int32_t>::max();
    for (Vertex v = 0; v < n; ++v) {
        out.ecc[v] = single_source(g, v, nullptr).ecc;
        if (out.ecc[v] < out.radius) {
            out.radius = out.ecc[v];
            out.center = v;
        }
    }
    return out;
}

} // namespace gm
