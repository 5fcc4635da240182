#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sepcx/errors.hpp"

namespace sepcx {

using Vertex = std::uint32_t;
using VertexBitset = boost::dynamic_bitset<std::uint64_t>;

/// Simple undirected graph on vertices 0..size()-1 stored as adjacency bitsets.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count)
        : adjacency_(vertex_count, VertexBitset(vertex_count)) {}

    std::size_t size() const { return adjacency_.size(); }

    void add_edge(Vertex u, Vertex v)
    {
        if (u >= size() || v >= size())
            throw InvalidArgument("Graph::add_edge: vertex out of range");
        if (u == v)
            throw InvalidArgument("Graph::add_edge: self loops are not allowed");
        adjacency_[u].set(v);
        adjacency_[v].set(u);
    }

    bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }

    const VertexBitset& neighbors(Vertex v) const { return adjacency_[v]; }

    std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

    std::size_t edge_count() const
    {
        std::size_t twice = 0;
        for (const auto& row : adjacency_)
            twice += row.count();
        return twice / 2;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < size(); ++u)
            for (auto v = adjacency_[u].find_next(u); v != VertexBitset::npos; v = adjacency_[u].find_next(v))
                out.emplace_back(u, static_cast<Vertex>(v));
        return out;
    }

    bool is_clique(const std::vector<Vertex>& vertices) const
    {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                if (!adjacent(vertices[i], vertices[j]))
                    return false;
        return true;
    }

    /// Induced subgraph on `keep`, relabelled 0..keep.size()-1 in the given order.
    Graph induced(const std::vector<Vertex>& keep) const
    {
        Graph out(keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = i + 1; j < keep.size(); ++j)
                if (adjacent(keep[i], keep[j]))
                    out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
        return out;
    }

    /// All maximal cliques, each sorted, the list sorted lexicographically.
    /// Bron-Kerbosch with Tomita pivoting. Isolated vertices come out as
    /// singleton cliques.
    std::vector<std::vector<Vertex>> maximal_cliques() const
    {
        std::vector<std::vector<Vertex>> cliques;
        if (size() == 0)
            return cliques;
        std::vector<Vertex> current;
        VertexBitset candidates(size());
        candidates.set();
        VertexBitset excluded(size());
        expand(current, candidates, excluded, cliques);
        for (auto& c : cliques)
            std::sort(c.begin(), c.end());
        std::sort(cliques.begin(), cliques.end());
        return cliques;
    }

private:
    void expand(std::vector<Vertex>& current, VertexBitset candidates, VertexBitset excluded,
                std::vector<std::vector<Vertex>>& cliques) const
    {
        if (candidates.none()) {
            if (excluded.none())
                cliques.push_back(current);
            return;
        }
        // Pivot on the vertex of P u X with the most neighbours in P.
        std::size_t pivot = VertexBitset::npos;
        std::size_t best = 0;
        for (const VertexBitset* pool : {&candidates, &excluded}) {
            for (auto u = pool->find_first(); u != VertexBitset::npos; u = pool->find_next(u)) {
                const std::size_t hits = (candidates & adjacency_[u]).count();
                if (pivot == VertexBitset::npos || hits > best) {
                    pivot = u;
                    best = hits;
                }
            }
        }
        VertexBitset branch = candidates - adjacency_[pivot];
        for (auto v = branch.find_first(); v != VertexBitset::npos; v = branch.find_next(v)) {
            current.push_back(static_cast<Vertex>(v));
            expand(current, candidates & adjacency_[v], excluded & adjacency_[v], cliques);
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
        }
    }

    std::vector<VertexBitset> adjacency_;
};

}  // namespace sepcx
