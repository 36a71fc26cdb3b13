#pragma once

#include "graphmetrics/clique.hpp"

#include <optional>
#include <string>

namespace gm {

/// A pair with ecc(u) = ecc(v) = d(u,v), found by repeated far-vertex
/// jumps from vertex 0 while the distance strictly increases. The two
/// final BFS profiles are returned for reuse.
struct MutuallyDistantPair {
    Vertex u = 0;
    Vertex v = 0;
    std::int32_t distance = 0;
    int iterations = 0;
    DistanceProfile from_u;
    DistanceProfile from_v;
};

MutuallyDistantPair mutually_distant_pair(const Graph& g, PassCounter* passes = nullptr);

/// Eccentricity class of the vertex returned by process_clique, relative
/// to r = ecc(K) - 1.
enum class EccClass { at_most_r, exactly_r_plus_1, at_least_2r };

const char* to_string(EccClass c);

struct ProcessCliqueOutcome {
    Vertex vertex = -1;
    EccClass classification = EccClass::at_most_r;
    std::int32_t ecc = 0;   ///< true eccentricity of `vertex` (final BFS)
    Vertex far_vertex = -1; ///< lowest-id vertex of F(vertex)
};

/// The odd-case procedure on a clique K with ecc(K) = r+1 >= 3 whose
/// vertices all have eccentricity r+1 (callers guarantee this; set
/// check_preconditions to have it asserted with uncharged BFS runs).
///
/// Returns a vertex of eccentricity <= r, exactly r+1, or >= 2r. In the
/// middle case no vertex of B_1(K) has eccentricity <= r. The far-pivot
/// x0 may be replaced once; a second replacement certifies the input is
/// not 1/2-hyperbolic and raises Errc::not_half_hyperbolic.
ProcessCliqueOutcome process_clique(const Graph& g, std::span<const Vertex> k_clique,
                                    PassCounter* passes = nullptr,
                                    const DistanceProfile* from_k = nullptr,
                                    bool check_preconditions = false);

struct CenterOptions {
    int pass_budget = 60;        ///< linear-pass ceiling; exceeding it raises an error
    int max_pair_upgrades = 3;   ///< a valid input upgrades at most once
    bool check_preconditions = false; ///< oracle-mode asserts inside process_clique
};

struct CenterReport {
    Vertex center = -1;
    std::int32_t radius = 0;
    std::vector<std::string> phases; ///< even-case / odd-slice-1 / odd-slice-2 / pair-upgrade
    int bfs_passes = 0;
    int pair_upgrades = 0;
    std::optional<std::int32_t> oracle_radius; ///< filled by verification wrappers, never here
};

/// Central vertex of a 1/2-hyperbolic graph in a bounded number of linear
/// passes. On other inputs the result may be wrong or the bounded
/// iteration diagnostics may fire; nothing is checked up front.
CenterReport compute_center(const Graph& g, const CenterOptions& options = {});

struct BruteForceCenter {
    Vertex center = -1;
    std::int32_t radius = 0;
    std::vector<std::int32_t> ecc; ///< all eccentricities
};

/// n-BFS oracle. Throws Errc::too_large above the cap.
BruteForceCenter brute_force_center(const Graph& g, Vertex max_n = 20000);

} // namespace gm
