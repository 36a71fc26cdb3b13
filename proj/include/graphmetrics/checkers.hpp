#pragma once

#include "graphmetrics/graph.hpp"

#include <array>
#include <optional>
#include <string>

namespace gm {

/// Exact Gromov hyperbolicity. Half-integers are kept as integer counts of
/// half-units so no floating point is involved anywhere.
struct HyperbolicityResult {
    std::int32_t delta_half_units = 0;
    std::array<Vertex, 4> witness{}; ///< quadruple attaining delta, lexicographically least
};

/// "0", "1/2", "1", "3/2", ...
std::string delta_to_string(std::int32_t half_units);

/// Exhaustive four-point scan over a precomputed distance matrix. For each
/// quadruple the three pairwise distance sums S1 >= S2 >= S3 give a defect
/// of S1 - S2 half-units; delta is the maximum defect.
/// Throws Errc::too_large ("instance too large for exact hyperbolicity")
/// above the cap.
HyperbolicityResult hyperbolicity_exact(const Graph& g, Vertex max_n = 500);

/// Recompute the defect of one quadruple (in half-units).
std::int32_t four_point_defect(const DistanceMatrix& dm, const std::array<Vertex, 4>& q);

struct CheckResult {
    bool holds = true;
    std::array<Vertex, 4> witness{}; ///< populated iff !holds
};

/// alpha1 condition: whenever v in I(u,w) and w in I(v,x) are adjacent,
/// d(u,x) >= d(u,v) + d(w,x). Returns the first violating (u,v,w,x) in
/// lexicographic order otherwise.
CheckResult check_alpha1(const Graph& g, Vertex max_n = 500);

/// Ball convexity: for all c,x,y and all z in I(x,y), d(c,z) <= max(d(c,x),
/// d(c,y)). Equivalent to every ball being convex. Witness is (c,x,y,z).
CheckResult check_convex_balls(const Graph& g, Vertex max_n = 500);

struct MetricTriangle {
    Vertex x, y, z;
    std::array<std::int32_t, 3> type; ///< (d(x,y), d(y,z), d(z,x))
};

struct QuasiMedianResult {
    std::optional<Vertex> median;           ///< set when the three intervals meet
    std::optional<MetricTriangle> triangle; ///< quasi-median otherwise
};

/// Median vertex of the triple if one exists (lowest id), else a
/// quasi-median: a metric triangle x',y',z' realizing the pairwise
/// distances of (x,y,z). Brute-force search over interval candidates,
/// lexicographically first. Pass a matrix to amortize repeated queries.
QuasiMedianResult quasi_median(const Graph& g, Vertex x, Vertex y, Vertex z,
                               const DistanceMatrix* dm = nullptr);

/// True iff `map` embeds h into g preserving all pairwise distances.
/// map[a] is the image of vertex a of h; must be injective.
bool verify_isometric_map(const Graph& h, const Graph& g, std::span<const Vertex> map);

} // namespace gm
