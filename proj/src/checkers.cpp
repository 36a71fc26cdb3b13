#include "graphmetrics/checkers.hpp"

#include <algorithm>

namespace gm {

namespace {

DistanceMatrix matrix_or_throw(const Graph& g, Vertex max_n, const char* what) {
    if (g.vertex_count() > max_n)
        throw Error(Errc::too_large, std::string(what) + ": n = " + std::to_string(g.vertex_count()) +
                                         " > cap " + std::to_string(max_n));
    return DistanceMatrix::compute(g, max_n);
}

} // namespace

std::string delta_to_string(std::int32_t half_units) {
    if (half_units % 2 == 0)
        return std::to_string(half_units / 2);
    return std::to_string(half_units) + "/2";
}

std::int32_t four_point_defect(const DistanceMatrix& dm, const std::array<Vertex, 4>& q) {
    const auto [u, v, x, y] = q;
    std::int32_t s1 = dm(u, v) + dm(x, y);
    std::int32_t s2 = dm(u, x) + dm(v, y);
    std::int32_t s3 = dm(u, y) + dm(v, x);
    std::int32_t hi = std::max({s1, s2, s3});
    std::int32_t lo = std::min({s1, s2, s3});
    std::int32_t mid = s1 + s2 + s3 - hi - lo;
    return hi - mid;
}

HyperbolicityResult hyperbolicity_exact(const Graph& g, Vertex max_n) {
    if (g.vertex_count() > max_n)
        throw Error(Errc::too_large, "instance too large for exact hyperbolicity: n = " +
                                         std::to_string(g.vertex_count()) + " > cap " + std::to_string(max_n));
    const Vertex n = g.vertex_count();
    DistanceMatrix dm = DistanceMatrix::compute(g, max_n);

    HyperbolicityResult res;
    res.witness = {0, 0, 0, 0};
    if (n < 4)
        return res;

    // Unordered quadruples suffice: any ordering of {u,v,x,y} yields the
    // same three pairing sums.
    std::int32_t best = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const std::int32_t duv = dm(u, v);
            for (Vertex x = v + 1; x < n; ++x) {
                const std::int32_t dux = dm(u, x);
                const std::int32_t dvx = dm(v, x);
                for (Vertex y = x + 1; y < n; ++y) {
                    std::int32_t s1 = duv + dm(x, y);
                    std::int32_t s2 = dux + dm(v, y);
                    std::int32_t s3 = dvx + dm(u, y);
                    std::int32_t hi = s1 > s2 ? s1 : s2;
                    std::int32_t mid = s1 > s2 ? s2 : s1;
                    if (s3 > hi) {
                        mid = hi;
                        hi = s3;
                    } else if (s3 > mid) {
                        mid = s3;
                    }
                    if (hi - mid > best) {
                        best = hi - mid;
                        res.witness = {u, v, x, y};
                    }
                }
            }
        }
    }
    res.delta_half_units = best;
    return res;
}

CheckResult check_alpha1(const Graph& g, Vertex max_n) {
    DistanceMatrix dm = matrix_or_throw(g, max_n, "alpha1 check cap exceeded");
    const Vertex n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            const std::int32_t duv = dm(u, v);
            for (Vertex w : g.neighbors(v)) {
                if (dm(u, w) != duv + 1)
                    continue; // need v in I(u,w)
                for (Vertex x = 0; x < n; ++x) {
                    if (dm(v, x) != 1 + dm(w, x))
                        continue; // need w in I(v,x)
                    if (dm(u, x) < duv + dm(w, x))
                        return {false, {u, v, w, x}};
                }
            }
        }
    }
    return {};
}

CheckResult check_convex_balls(const Graph& g, Vertex max_n) {
    DistanceMatrix dm = matrix_or_throw(g, max_n, "convex-ball check cap exceeded");
    const Vertex n = g.vertex_count();
    for (Vertex c = 0; c < n; ++c) {
        for (Vertex x = 0; x < n; ++x) {
            for (Vertex y = x; y < n; ++y) {
                const std::int32_t dxy = dm(x, y);
                const std::int32_t cap = std::max(dm(c, x), dm(c, y));
                for (Vertex z = 0; z < n; ++z) {
                    if (dm(x, z) + dm(z, y) == dxy && dm(c, z) > cap)
                        return {false, {c, x, y, z}};
                }
            }
        }
    }
    return {};
}

QuasiMedianResult quasi_median(const Graph& g, Vertex x, Vertex y, Vertex z, const DistanceMatrix* dm_in) {
    DistanceMatrix local;
    if (!dm_in) {
        local = DistanceMatrix::compute(g);
        dm_in = &local;
    }
    const DistanceMatrix& dm = *dm_in;
    const Vertex n = g.vertex_count();

    auto on_interval = [&](Vertex a, Vertex b, Vertex w) { return dm(a, w) + dm(w, b) == dm(a, b); };

    // Median: lowest-id vertex common to all three intervals.
    for (Vertex w = 0; w < n; ++w)
        if (on_interval(x, y, w) && on_interval(y, z, w) && on_interval(z, x, w))
            return {w, std::nullopt};

    // Quasi-median candidates: xp must sit on shortest paths from x toward
    // both y and z, and likewise for yp, zp.
    VertexList xs, ys, zs;
    for (Vertex w = 0; w < n; ++w) {
        if (on_interval(x, y, w) && on_interval(x, z, w))
            xs.push_back(w);
        if (on_interval(y, x, w) && on_interval(y, z, w))
            ys.push_back(w);
        if (on_interval(z, x, w) && on_interval(z, y, w))
            zs.push_back(w);
    }

    std::vector<char> in_open(static_cast<std::size_t>(n), 0);
    auto disjoint_open_intervals = [&](Vertex a, Vertex b, Vertex c) {
        // I°(a,b), I°(b,c), I°(c,a) pairwise disjoint.
        std::fill(in_open.begin(), in_open.end(), 0);
        for (Vertex w = 0; w < n; ++w)
            if (w != a && w != b && on_interval(a, b, w))
                in_open[w] = 1;
        for (Vertex w = 0; w < n; ++w) {
            if (w == b || w == c)
                continue;
            if (on_interval(b, c, w)) {
                if (in_open[w])
                    return false;
                in_open[w] = 2;
            }
        }
        for (Vertex w = 0; w < n; ++w)
            if (w != c && w != a && on_interval(c, a, w) && in_open[w])
                return false;
        return true;
    };

    for (Vertex xp : xs) {
        for (Vertex yp : ys) {
            if (dm(x, xp) + dm(xp, yp) + dm(yp, y) != dm(x, y))
                continue;
            for (Vertex zp : zs) {
                if (dm(y, yp) + dm(yp, zp) + dm(zp, z) != dm(y, z))
                    continue;
                if (dm(z, zp) + dm(zp, xp) + dm(xp, x) != dm(z, x))
                    continue;
                if (xp == yp || yp == zp || zp == xp)
                    continue;
                if (!disjoint_open_intervals(xp, yp, zp))
                    continue;
                MetricTriangle t{xp, yp, zp, {dm(xp, yp), dm(yp, zp), dm(zp, xp)}};
                return {std::nullopt, t};
            }
        }
    }
    throw Error(Errc::precondition, "triple admits neither a median nor a quasi-median");
}

bool verify_isometric_map(const Graph& h, const Graph& g, std::span<const Vertex> map) {
    const Vertex hn = h.vertex_count();
    if (static_cast<Vertex>(map.size()) != hn)
        throw Error(Errc::invalid_argument, "map size does not match the host graph order");
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex a = 0; a < hn; ++a) {
        Vertex im = map[a];
        if (im < 0 || im >= g.vertex_count())
            throw Error(Errc::invalid_argument, "map image out of range");
        if (seen[im])
            throw Error(Errc::invalid_argument, "map is not injective");
        seen[im] = 1;
    }
    for (Vertex a = 0; a < hn; ++a) {
        auto dh = distance_profile(h, std::span<const Vertex>(&a, 1)).dist;
        Vertex im = map[a];
        auto dg = distance_profile(g, std::span<const Vertex>(&im, 1)).dist;
        for (Vertex b = 0; b < hn; ++b)
            if (dh[b] != dg[map[b]])
                return false;
    }
    return true;
}

} // namespace gm
