#include "graphmetrics/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace gm {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
    if (!g.has_vertex(v))
        throw Error(Errc::invalid_argument, std::string(what) + ": vertex " + std::to_string(v) + " out of range");
}

std::vector<std::int32_t> bfs(const Graph& g, std::span<const Vertex> sources, PassCounter* passes) {
    if (sources.empty())
        throw Error(Errc::invalid_argument, "empty source set");
    for (Vertex s : sources)
        check_vertex(g, s, "bfs source");
    if (passes)
        passes->charge();

    std::vector<std::int32_t> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    VertexList queue;
    queue.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex s : sources) {
        if (dist[s] == -1) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        std::int32_t dv = dist[v];
        for (Vertex w : g.neighbors(v)) {
            if (dist[w] == -1) {
                dist[w] = dv + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

} // namespace

Graph Graph::from_edges(Vertex n, std::span<const std::array<Vertex, 2>> edges) {
    if (n < 1)
        throw Error(Errc::invalid_argument, "graph needs at least one vertex");
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(edges.size());

    std::vector<std::int64_t> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(Errc::invalid_argument,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            throw Error(Errc::not_simple, "self-loop at vertex " + std::to_string(u));
        ++deg[static_cast<std::size_t>(u) + 1];
        ++deg[static_cast<std::size_t>(v) + 1];
    }
    g.offsets_.assign(deg.begin(), deg.end());
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    g.adj_.resize(static_cast<std::size_t>(2) * edges.size());
    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto beg = g.adj_.begin() + g.offsets_[v];
        auto end = g.adj_.begin() + g.offsets_[v + 1];
        std::sort(beg, end);
        if (std::adjacent_find(beg, end) != end)
            throw Error(Errc::not_simple, "duplicate edge at vertex " + std::to_string(v));
    }

    const Vertex root = 0;
    auto dist = bfs(g, std::span<const Vertex>(&root, 1), nullptr);
    for (Vertex v = 0; v < n; ++v)
        if (dist[v] == -1)
            throw Error(Errc::not_connected, "graph is not connected (vertex " + std::to_string(v) + " unreachable)");
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::array<Vertex, 2>> Graph::edges() const {
    std::vector<std::array<Vertex, 2>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex v = 0; v < n_; ++v)
        for (Vertex w : neighbors(v))
            if (v < w)
                out.push_back({v, w});
    return out;
}

DistanceProfile distance_profile(const Graph& g, std::span<const Vertex> source, PassCounter* passes) {
    DistanceProfile p;
    p.source.assign(source.begin(), source.end());
    p.dist = bfs(g, source, passes);
    p.ecc = *std::max_element(p.dist.begin(), p.dist.end());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (p.dist[v] == p.ecc)
            p.far_set.push_back(v);
    return p;
}

VertexList interval(const Graph& g, Vertex u, Vertex v) {
    check_vertex(g, u, "interval");
    check_vertex(g, v, "interval");
    auto du = bfs(g, std::span<const Vertex>(&u, 1), nullptr);
    auto dv = bfs(g, std::span<const Vertex>(&v, 1), nullptr);
    VertexList out;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (du[w] + dv[w] == du[v])
            out.push_back(w);
    return out;
}

VertexList slice(const Graph& g, Vertex u, Vertex v, std::int32_t k) {
    check_vertex(g, u, "slice");
    check_vertex(g, v, "slice");
    auto du = bfs(g, std::span<const Vertex>(&u, 1), nullptr);
    auto dv = bfs(g, std::span<const Vertex>(&v, 1), nullptr);
    if (k < 0 || k > du[v])
        throw Error(Errc::invalid_argument,
                    "slice index " + std::to_string(k) + " out of range [0," + std::to_string(du[v]) + "]");
    VertexList out;
    for (Vertex w = 0; w < g.vertex_count(); ++w)
        if (du[w] + dv[w] == du[v] && du[w] == k)
            out.push_back(w);
    return out;
}

VertexList projection(const Graph& g, Vertex y, std::span<const Vertex> x_set) {
    check_vertex(g, y, "projection");
    if (x_set.empty())
        throw Error(Errc::invalid_argument, "projection on an empty set");
    auto dy = bfs(g, std::span<const Vertex>(&y, 1), nullptr);
    std::int32_t best = std::numeric_limits<std::int32_t>::max();
    for (Vertex x : x_set) {
        check_vertex(g, x, "projection");
        best = std::min(best, dy[x]);
    }
    VertexList out;
    for (Vertex x : x_set)
        if (dy[x] == best)
            out.push_back(x);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::int32_t weak_diameter(const Graph& g, std::span<const Vertex> x_set) {
    if (x_set.empty())
        throw Error(Errc::invalid_argument, "weak diameter of an empty set");
    std::int32_t best = 0;
    for (Vertex x : x_set) {
        check_vertex(g, x, "weak_diameter");
        auto dx = bfs(g, std::span<const Vertex>(&x, 1), nullptr);
        for (Vertex y : x_set)
            best = std::max(best, dx[y]);
    }
    return best;
}

DistanceMatrix DistanceMatrix::compute(const Graph& g, Vertex max_n) {
    DistanceMatrix m;
    m.n_ = g.vertex_count();
    if (m.n_ > max_n)
        throw Error(Errc::too_large, "distance matrix cap exceeded: n = " + std::to_string(m.n_) +
                                         " > " + std::to_string(max_n));
    m.d_.resize(static_cast<std::size_t>(m.n_) * m.n_);
    for (Vertex v = 0; v < m.n_; ++v) {
        auto dist = bfs(g, std::span<const Vertex>(&v, 1), nullptr);
        std::int16_t* row = m.d_.data() + static_cast<std::size_t>(v) * m.n_;
        for (Vertex w = 0; w < m.n_; ++w)
            row[w] = static_cast<std::int16_t>(dist[w]);
    }
    return m;
}

std::int32_t DistanceMatrix::ecc(Vertex v) const {
    const std::int16_t* row = d_.data() + static_cast<std::size_t>(v) * n_;
    return *std::max_element(row, row + n_);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    if (keep.empty())
        throw Error(Errc::invalid_argument, "induced subgraph on an empty set");
    std::vector<Vertex> remap(static_cast<std::size_t>(g.vertex_count()), -1);
    Vertex next = 0;
    for (Vertex v : keep) {
        check_vertex(g, v, "induced_subgraph");
        if (remap[v] != -1)
            throw Error(Errc::invalid_argument, "induced_subgraph: duplicate vertex " + std::to_string(v));
        remap[v] = next++;
    }
    std::vector<std::array<Vertex, 2>> edges;
    for (Vertex v : keep)
        for (Vertex w : g.neighbors(v))
            if (remap[w] != -1 && v < w)
                edges.push_back({remap[v], remap[w]});
    return Graph::from_edges(next, edges);
}

} // namespace gm
