#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "sepcx/complex.hpp"

namespace sepcx {

using VertexMap = std::map<Vertex, Vertex>;

namespace detail {

// Per-vertex invariant: sorted sizes of incident facets, then 1-skeleton degree.
inline std::vector<std::size_t> vertex_signature(const Complex& x, const Graph& skeleton, Vertex v)
{
    std::vector<std::size_t> sig;
    for (auto idx : x.incident_facets(v))
        sig.push_back(x.facets()[idx].size());
    std::sort(sig.begin(), sig.end());
    sig.push_back(skeleton.degree(v));
    return sig;
}

}  // namespace detail

/// Searches for a vertex bijection X -> Y carrying facets onto facets. Exact
/// backtracking with degree/facet-profile pruning; meant for complexes with at
/// most 64 vertices.
inline std::optional<VertexMap> isomorphic(const Complex& x, const Complex& y)
{
    const auto vx = x.vertices();
    const auto vy = y.vertices();
    if (vx.size() > 64 || vy.size() > 64)
        throw InvalidArgument("isomorphic: complexes with more than 64 vertices are not supported");
    if (vx.size() != vy.size() || x.facet_count() != y.facet_count())
        return std::nullopt;
    if (f_vector(x) != f_vector(y))
        return std::nullopt;
    if (vx.empty())
        return VertexMap{};

    const Graph gx = one_skeleton(x);
    const Graph gy = one_skeleton(y);
    std::map<Vertex, std::vector<std::size_t>> sig_x, sig_y;
    for (Vertex v : vx)
        sig_x[v] = detail::vertex_signature(x, gx, v);
    for (Vertex v : vy)
        sig_y[v] = detail::vertex_signature(y, gy, v);
    {
        std::vector<std::vector<std::size_t>> a, b;
        for (auto& [v, s] : sig_x)
            a.push_back(s);
        for (auto& [v, s] : sig_y)
            b.push_back(s);
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b)
            return std::nullopt;
    }

    // Breadth-first order so each vertex (after a component's first) is
    // adjacent to an earlier one.
    std::vector<Vertex> order;
    std::vector<bool> placed(x.table_size(), false);
    for (Vertex start : vx) {
        if (placed[start])
            continue;
        std::queue<Vertex> queue;
        queue.push(start);
        placed[start] = true;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop();
            order.push_back(u);
            const auto& nb = gx.neighbors(u);
            for (auto w = nb.find_first(); w != VertexBitset::npos; w = nb.find_next(w))
                if (!placed[w]) {
                    placed[w] = true;
                    queue.push(static_cast<Vertex>(w));
                }
        }
    }

    // Facets of X that become fully assigned at each depth.
    std::vector<std::size_t> position(x.table_size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i)
        position[order[i]] = i;
    std::vector<std::vector<std::size_t>> completed_at(order.size());
    for (std::size_t fi = 0; fi < x.facet_count(); ++fi) {
        std::size_t last = 0;
        for (Vertex v : x.facets()[fi])
            last = std::max(last, position[v]);
        completed_at[last].push_back(fi);
    }

    std::vector<Vertex> image(x.table_size(), 0);
    std::vector<bool> used(y.table_size(), false);

    auto search = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size())
            return true;
        const Vertex u = order[depth];
        for (Vertex cand : vy) {
            if (used[cand] || sig_y[cand] != sig_x[u])
                continue;
            bool consistent = true;
            for (std::size_t k = 0; k < depth && consistent; ++k)
                consistent = gx.adjacent(u, order[k]) == gy.adjacent(cand, image[order[k]]);
            if (!consistent)
                continue;
            image[u] = cand;
            used[cand] = true;
            for (auto fi : completed_at[depth]) {
                Face mapped;
                for (Vertex v : x.facets()[fi])
                    mapped.push_back(image[v]);
                std::sort(mapped.begin(), mapped.end());
                if (!std::binary_search(y.facets().begin(), y.facets().end(), mapped)) {
                    consistent = false;
                    break;
                }
            }
            if (consistent && self(self, depth + 1))
                return true;
            used[cand] = false;
        }
        return false;
    };

    if (!search(search, 0))
        return std::nullopt;
    VertexMap out;
    for (Vertex v : vx)
        out[v] = image[v];
    return out;
}

/// Applies a vertex map to a complex, producing a complex over `target_labels`.
inline Complex apply_vertex_map(const Complex& x, const VertexMap& map,
                                std::vector<std::string> target_labels)
{
    std::vector<Face> generators;
    for (const auto& f : x.facets()) {
        Face g;
        for (Vertex v : f)
            g.push_back(map.at(v));
        generators.push_back(std::move(g));
    }
    return Complex(std::move(target_labels), std::move(generators));
}

}  // namespace sepcx
