#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gm {

using Vertex = std::int32_t;
using VertexList = std::vector<Vertex>;

enum class Errc {
    invalid_argument,
    not_simple,
    not_connected,
    not_a_clique,
    too_large,
    not_half_hyperbolic,
    precondition,
    io_error,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Accounting of linear-time passes for the center solver. Every BFS run
/// under a counter charges one unit. The outergate classification fallback
/// charges a single unit regardless of clique size: it stands in for a
/// published linear-time routine that this library deliberately does not
/// reproduce (see classify_outergated).
struct PassCounter {
    int used = 0;
    int budget = -1; ///< negative = unlimited

    void charge(int units = 1) {
        used += units;
        if (budget >= 0 && used > budget) {
            throw Error(Errc::not_half_hyperbolic,
                        "pass budget exceeded (" + std::to_string(budget) +
                            " linear passes): input not 1/2-hyperbolic");
        }
    }
};

/// Immutable, undirected, unweighted, simple, connected graph with dense
/// vertex ids 0..n-1. Adjacency lists are kept sorted so neighbourhood
/// intersections run in linear time.
class Graph {
public:
    /// Validates and builds. Throws Errc::not_simple on loops/duplicates,
    /// Errc::not_connected if a BFS from vertex 0 misses a vertex,
    /// Errc::invalid_argument on out-of-range endpoints or n < 1.
    static Graph from_edges(Vertex n, std::span<const std::array<Vertex, 2>> edges);

    Vertex vertex_count() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(offsets_[v + 1] - offsets_[v]); }
    bool adjacent(Vertex u, Vertex v) const;
    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// Edge list in canonical order (u < v, lexicographic).
    std::vector<std::array<Vertex, 2>> edges() const;

private:
    Graph() = default;
    Vertex n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_;
    std::vector<Vertex> adj_;
};

/// Distances from a vertex set, with the derived eccentricity and far set.
struct DistanceProfile {
    VertexList source;
    std::vector<std::int32_t> dist; ///< hop distance to the nearest source
    std::int32_t ecc = 0;           ///< max over dist
    VertexList far_set;             ///< ascending; vertices attaining ecc
};

/// Multi-source BFS. Throws Errc::invalid_argument on an empty source set
/// ("empty source set") or out-of-range ids.
DistanceProfile distance_profile(const Graph& g, std::span<const Vertex> source,
                                 PassCounter* passes = nullptr);

/// I(u,v): all vertices on some shortest uv-path, ascending.
VertexList interval(const Graph& g, Vertex u, Vertex v);

/// S_k(u,v): interval vertices at distance k from u. Requires 0 <= k <= d(u,v).
VertexList slice(const Graph& g, Vertex u, Vertex v, std::int32_t k);

/// proj_y(X): members of X nearest to y, ascending. X must be nonempty.
VertexList projection(const Graph& g, Vertex y, std::span<const Vertex> x_set);

/// Max pairwise distance within X, measured in g. X must be nonempty.
std::int32_t weak_diameter(const Graph& g, std::span<const Vertex> x_set);

/// All-pairs distances via n BFS runs. Opt-in oracle utility: the center
/// algorithm never touches it, which keeps the pass accounting meaningful.
class DistanceMatrix {
public:
    static constexpr Vertex kDefaultCap = 2048;

    /// Throws Errc::too_large when vertex_count() > max_n.
    static DistanceMatrix compute(const Graph& g, Vertex max_n = kDefaultCap);

    std::int32_t operator()(Vertex u, Vertex v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    Vertex vertex_count() const noexcept { return n_; }

    /// Eccentricity of v read off the matrix row.
    std::int32_t ecc(Vertex v) const;

private:
    Vertex n_ = 0;
    std::vector<std::int16_t> d_;
};

/// Induced subgraph on `keep` (ascending ids are reassigned 0..|keep|-1).
/// The result must still be connected; throws otherwise.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

} // namespace gm
