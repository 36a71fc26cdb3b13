#pragma once

#include "graphmetrics/graph.hpp"

namespace gm {

/// True iff the vertices are pairwise adjacent (duplicates ignored).
bool is_clique(const Graph& g, std::span<const Vertex> k_set);

/// Throws Errc::not_a_clique ("not a clique") otherwise.
void require_clique(const Graph& g, std::span<const Vertex> k_set);

/// For every z outside X: a candidate z* in B_{d(z,X)-1}(z) ∩ B_1(X)
/// maximizing |N(z*) ∩ X| (ties to the lowest id). One multi-source BFS
/// plus one sweep over the adjacency in increasing distance from X.
/// When X is outergated, z* is an outergate of z.
struct OutergateAssignment {
    std::vector<std::int32_t> dist;  ///< d(z, X)
    std::vector<Vertex> candidate;   ///< z*; -1 for members of X
    std::vector<std::int32_t> count; ///< |N(z*) ∩ X|; -1 for members of X
};

/// `dist_from_x` may carry a precomputed multi-source BFS from X to skip one pass.
OutergateAssignment outergate_candidates(const Graph& g, std::span<const Vertex> x_set,
                                         PassCounter* passes = nullptr,
                                         const std::vector<std::int32_t>* dist_from_x = nullptr);

/// Per-vertex outergate existence with respect to a clique K. A vertex z
/// outside K has an outergate iff its best candidate is adjacent to all of
/// proj_z(K), i.e. the candidate count reaches |proj_z(K)|.
///
/// |proj_z(K)| is obtained by one BFS per clique vertex, O(|K| m). A cited
/// O(m) classification exists for graphs with convex balls; it is not
/// reproduced here, and the pass accounting charges this call as a single
/// linear pass in its stead.
///
/// On graphs with convex balls every z without an outergate satisfies
/// proj_z(K) = K; vertices violating that are reported in cb_violations.
struct OutergateClassification {
    OutergateAssignment assignment;
    std::vector<std::int32_t> proj_size;    ///< |proj_z(K)|; 1 for members of K
    std::vector<std::uint8_t> has_outergate; ///< 1 for members of K
    VertexList cb_violations;
};

OutergateClassification classify_outergated(const Graph& g, std::span<const Vertex> k_clique,
                                            PassCounter* passes = nullptr,
                                            const std::vector<std::int32_t>* dist_from_k = nullptr);

/// Shadow counts psi_K(w, M) = |{z in M : w in proj_z(K)}| for every w in K,
/// in K's (sorted) order. Computed through the outergate partition of M:
/// vertices with an outergate contribute through their candidate, the rest
/// project onto all of K. Requires K a clique and M ∩ K = ∅.
std::vector<std::int32_t> clique_shadows(const Graph& g, std::span<const Vertex> k_clique,
                                         std::span<const Vertex> m_set, PassCounter* passes = nullptr,
                                         const std::vector<std::int32_t>* dist_from_k = nullptr);

/// Potential counts phi_r(w, M) = |B_r(w) ∩ M| for every w in K, reduced to
/// |{z in M : d(z,K) < r}| plus the shadows of the distance-r layer of M.
/// Requires r >= 1.
std::vector<std::int32_t> clique_potentials(const Graph& g, std::span<const Vertex> k_clique,
                                            std::span<const Vertex> m_set, std::int32_t radius,
                                            PassCounter* passes = nullptr,
                                            const std::vector<std::int32_t>* dist_from_k = nullptr);

/// ecc(w) for every w of a clique K: ecc(K) when w shadows the whole far
/// set F(K), ecc(K)+1 otherwise. Degenerate K = V gives all ones (zero on
/// the one-vertex graph).
struct CliqueEccentricities {
    VertexList clique;              ///< sorted K, aligning with ecc
    std::vector<std::int32_t> ecc;  ///< per clique vertex
    std::int32_t clique_ecc = 0;    ///< ecc(K)
    VertexList far_set;             ///< F(K)
};

CliqueEccentricities clique_eccentricities(const Graph& g, std::span<const Vertex> k_clique,
                                           PassCounter* passes = nullptr);

} // namespace gm
