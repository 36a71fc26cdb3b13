#include "graphmetrics/clique.hpp"

#include <algorithm>

namespace gm {

namespace {

VertexList sorted_unique(std::span<const Vertex> vs) {
    VertexList out(vs.begin(), vs.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::int32_t> dist_from_set(const Graph& g, std::span<const Vertex> x_set, PassCounter* passes) {
    return distance_profile(g, x_set, passes).dist;
}

} // namespace

bool is_clique(const Graph& g, std::span<const Vertex> k_set) {
    VertexList k = sorted_unique(k_set);
    for (Vertex v : k)
        if (!g.has_vertex(v))
            throw Error(Errc::invalid_argument, "clique vertex " + std::to_string(v) + " out of range");
    for (Vertex w : k) {
        auto nb = g.neighbors(w);
        std::size_t hits = 0;
        auto it = nb.begin();
        for (Vertex v : k) {
            if (v == w)
                continue;
            it = std::lower_bound(it, nb.end(), v);
            if (it == nb.end() || *it != v)
                return false;
            ++hits;
        }
        if (hits != k.size() - 1)
            return false;
    }
    return true;
}

void require_clique(const Graph& g, std::span<const Vertex> k_set) {
    if (k_set.empty())
        throw Error(Errc::invalid_argument, "empty clique");
    if (!is_clique(g, k_set))
        throw Error(Errc::not_a_clique, "not a clique");
}

OutergateAssignment outergate_candidates(const Graph& g, std::span<const Vertex> x_set, PassCounter* passes,
                                         const std::vector<std::int32_t>* dist_from_x) {
    if (x_set.empty())
        throw Error(Errc::invalid_argument, "empty source set");
    const Vertex n = g.vertex_count();
    OutergateAssignment a;
    a.dist = dist_from_x ? *dist_from_x : dist_from_set(g, x_set, passes);
    a.candidate.assign(static_cast<std::size_t>(n), -1);
    a.count.assign(static_cast<std::size_t>(n), -1);

    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    for (Vertex v : x_set)
        in_x[v] = 1;

    // Vertices in increasing distance from X (counting sort keeps ids
    // ascending inside a layer, which pins the tie-breaks).
    std::int32_t maxd = *std::max_element(a.dist.begin(), a.dist.end());
    std::vector<VertexList> layers(static_cast<std::size_t>(maxd) + 1);
    for (Vertex v = 0; v < n; ++v)
        layers[a.dist[v]].push_back(v);

    for (std::int32_t d = 1; d <= maxd; ++d) {
        for (Vertex z : layers[d]) {
            if (in_x[z])
                continue;
            if (d == 1) {
                // B_0(z) ∩ B_1(X) = {z}; count its clique neighbours.
                std::int32_t c = 0;
                for (Vertex w : g.neighbors(z))
                    if (in_x[w])
                        ++c;
                a.candidate[z] = z;
                a.count[z] = c;
            } else {
                // Best candidate reachable through a down-layer neighbour.
                Vertex best = -1;
                std::int32_t best_count = -1;
                for (Vertex y : g.neighbors(z)) {
                    if (a.dist[y] != d - 1 || a.candidate[y] < 0)
                        continue;
                    if (a.count[y] > best_count || (a.count[y] == best_count && a.candidate[y] < best)) {
                        best = a.candidate[y];
                        best_count = a.count[y];
                    }
                }
                a.candidate[z] = best;
                a.count[z] = best_count;
            }
        }
    }
    return a;
}

OutergateClassification classify_outergated(const Graph& g, std::span<const Vertex> k_clique, PassCounter* passes,
                                            const std::vector<std::int32_t>* dist_from_k) {
    VertexList k = sorted_unique(k_clique);
    require_clique(g, k);
    const Vertex n = g.vertex_count();

    OutergateClassification c;
    std::vector<std::int32_t> dist = dist_from_k ? *dist_from_k : dist_from_set(g, k, passes);

    // One BFS per clique vertex, charged once as a whole (stand-in for the
    // published linear-time classification).
    if (passes)
        passes->charge();
    c.proj_size.assign(static_cast<std::size_t>(n), 0);
    for (Vertex w : k) {
        auto dw = distance_profile(g, std::span<const Vertex>(&w, 1)).dist;
        for (Vertex z = 0; z < n; ++z)
            if (dw[z] == dist[z])
                ++c.proj_size[z];
    }

    c.assignment = outergate_candidates(g, k, passes, &dist);
    c.has_outergate.assign(static_cast<std::size_t>(n), 0);
    const auto ksize = static_cast<std::int32_t>(k.size());
    for (Vertex z = 0; z < n; ++z) {
        if (dist[z] == 0) {
            c.has_outergate[z] = 1;
            c.proj_size[z] = 1;
            continue;
        }
        c.has_outergate[z] = (c.assignment.count[z] == c.proj_size[z]) ? 1 : 0;
        if (!c.has_outergate[z] && c.proj_size[z] != ksize)
            c.cb_violations.push_back(z);
    }
    return c;
}

std::vector<std::int32_t> clique_shadows(const Graph& g, std::span<const Vertex> k_clique,
                                         std::span<const Vertex> m_set, PassCounter* passes,
                                         const std::vector<std::int32_t>* dist_from_k) {
    VertexList k = sorted_unique(k_clique);
    require_clique(g, k);
    VertexList m = sorted_unique(m_set);
    {
        auto it = k.begin();
        for (Vertex z : m) {
            it = std::lower_bound(it, k.end(), z);
            if (it != k.end() && *it == z)
                throw Error(Errc::invalid_argument, "clique and target set overlap at vertex " + std::to_string(z));
        }
    }
    if (m.empty())
        return std::vector<std::int32_t>(k.size(), 0);

    OutergateClassification cls = classify_outergated(g, k, passes, dist_from_k);

    // gamma(s): how many target vertices with an outergate route through s.
    std::vector<std::int32_t> gamma(static_cast<std::size_t>(g.vertex_count()), 0);
    std::int32_t m2 = 0; // vertices without an outergate: they project onto all of K
    for (Vertex z : m) {
        if (cls.has_outergate[z])
            ++gamma[cls.assignment.candidate[z]];
        else
            ++m2;
    }

    std::vector<std::int32_t> psi(k.size(), 0);
    const auto& dist = cls.assignment.dist;
    for (std::size_t i = 0; i < k.size(); ++i) {
        std::int32_t sum = m2;
        for (Vertex s : g.neighbors(k[i]))
            if (dist[s] == 1)
                sum += gamma[s];
        psi[i] = sum;
    }
    return psi;
}

std::vector<std::int32_t> clique_potentials(const Graph& g, std::span<const Vertex> k_clique,
                                            std::span<const Vertex> m_set, std::int32_t radius,
                                            PassCounter* passes, const std::vector<std::int32_t>* dist_from_k) {
    if (radius < 1)
        throw Error(Errc::invalid_argument, "potential radius must be >= 1");
    VertexList k = sorted_unique(k_clique);
    require_clique(g, k);

    std::vector<std::int32_t> dist = dist_from_k ? *dist_from_k : dist_from_set(g, k, passes);

    std::int32_t below = 0;
    VertexList m_at;
    for (Vertex z : sorted_unique(m_set)) {
        if (dist[z] == 0)
            throw Error(Errc::invalid_argument, "clique and target set overlap at vertex " + std::to_string(z));
        if (dist[z] < radius)
            ++below;
        else if (dist[z] == radius)
            m_at.push_back(z);
    }

    std::vector<std::int32_t> phi;
    if (m_at.empty())
        phi.assign(k.size(), 0);
    else
        phi = clique_shadows(g, k, m_at, passes, &dist);
    for (auto& v : phi)
        v += below;
    return phi;
}

CliqueEccentricities clique_eccentricities(const Graph& g, std::span<const Vertex> k_clique, PassCounter* passes) {
    VertexList k = sorted_unique(k_clique);
    require_clique(g, k);

    CliqueEccentricities out;
    out.clique = k;
    DistanceProfile from_k = distance_profile(g, k, passes);
    out.clique_ecc = from_k.ecc;
    out.far_set = from_k.far_set;

    if (from_k.ecc == 0) {
        // K covers the whole vertex set.
        out.ecc.assign(k.size(), g.vertex_count() == 1 ? 0 : 1);
        return out;
    }

    auto psi = clique_shadows(g, k, from_k.far_set, passes, &from_k.dist);
    const auto far_count = static_cast<std::int32_t>(from_k.far_set.size());
    out.ecc.resize(k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
        out.ecc[i] = (psi[i] == far_count) ? from_k.ecc : from_k.ecc + 1;
    return out;
}

} // namespace gm
