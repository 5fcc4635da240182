#pragma once

// Abstract simplicial complexes stored by their facets over a shared vertex
// table. Subcomplexes (stars, links, deletions, ...) keep the parent's table so
// vertex indices stay comparable across them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepcx/errors.hpp"
#include "sepcx/graph.hpp"

namespace sepcx {

/// A face: strictly increasing vertex indices.
using Face = std::vector<Vertex>;

inline bool is_subset(const Face& small, const Face& large)
{
    return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

inline Face face_union(const Face& a, const Face& b)
{
    Face out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_intersection(const Face& a, const Face& b)
{
    Face out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline Face face_difference(const Face& a, const Face& b)
{
    Face out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Simplicial complex given by its facets. The empty face is implicit; a
/// complex with no facets has no vertices (the void complex).
class Complex {
public:
    Complex() = default;

    /// Builds the complex generated by `generators`: faces are sorted, checked
    /// against the table, deduplicated and reduced to the inclusion-maximal ones.
    Complex(std::vector<std::string> labels, std::vector<Face> generators)
        : labels_(std::move(labels))
    {
        for (auto& f : generators) {
            std::sort(f.begin(), f.end());
            if (std::adjacent_find(f.begin(), f.end()) != f.end())
                throw InvalidArgument("Complex: face repeats a vertex");
            if (!f.empty() && f.back() >= labels_.size())
                throw InvalidArgument("Complex: vertex index outside the vertex table");
        }
        facets_ = maximal_faces(std::move(generators), labels_.size());
        build_incidence();
    }

    /// Trusted construction from an already maximal, sorted facet list.
    static Complex from_facets(std::vector<std::string> labels, std::vector<Face> facets)
    {
        Complex out;
        out.labels_ = std::move(labels);
        out.facets_ = std::move(facets);
        std::sort(out.facets_.begin(), out.facets_.end());
        out.build_incidence();
        return out;
    }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }
    std::size_t table_size() const { return labels_.size(); }
    const std::vector<Face>& facets() const { return facets_; }
    std::size_t facet_count() const { return facets_.size(); }

    /// Facets containing vertex v, as positions in facets().
    const std::vector<std::uint32_t>& incident_facets(Vertex v) const { return incidence_.at(v); }

    bool has_vertex(Vertex v) const { return v < incidence_.size() && !incidence_[v].empty(); }

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        for (Vertex v = 0; v < incidence_.size(); ++v)
            if (!incidence_[v].empty())
                out.push_back(v);
        return out;
    }

    std::size_t vertex_count() const
    {
        std::size_t count = 0;
        for (const auto& list : incidence_)
            count += list.empty() ? 0 : 1;
        return count;
    }

    bool empty() const { return facets_.empty(); }

    /// Maximum facet dimension; -1 for the void complex.
    int dimension() const
    {
        int d = -1;
        for (const auto& f : facets_)
            d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    /// Face membership: contained in some facet. The empty face always is.
    bool contains(const Face& face) const
    {
        if (face.empty())
            return true;
        const std::vector<std::uint32_t>* rarest = nullptr;
        for (Vertex v : face) {
            if (v >= incidence_.size() || incidence_[v].empty())
                return false;
            if (rarest == nullptr || incidence_[v].size() < rarest->size())
                rarest = &incidence_[v];
        }
        for (auto idx : *rarest)
            if (is_subset(face, facets_[idx]))
                return true;
        return false;
    }

    /// Number of facets containing `face`.
    std::size_t facets_containing(const Face& face) const
    {
        if (face.empty())
            return facets_.size();
        const std::vector<std::uint32_t>* rarest = nullptr;
        for (Vertex v : face) {
            if (v >= incidence_.size() || incidence_[v].empty())
                return 0;
            if (rarest == nullptr || incidence_[v].size() < rarest->size())
                rarest = &incidence_[v];
        }
        std::size_t count = 0;
        for (auto idx : *rarest)
            count += is_subset(face, facets_[idx]) ? 1 : 0;
        return count;
    }

    /// Same complex over a different vertex table of the same size.
    Complex relabelled(std::vector<std::string> labels) const
    {
        if (labels.size() != labels_.size())
            throw InvalidArgument("Complex::relabelled: table size mismatch");
        return from_facets(std::move(labels), facets_);
    }

    friend bool operator==(const Complex& a, const Complex& b)
    {
        return a.labels_ == b.labels_ && a.facets_ == b.facets_;
    }

    /// Reduces a list of faces to its inclusion-maximal members, sorted.
    static std::vector<Face> maximal_faces(std::vector<Face> faces, std::size_t table_size)
    {
        std::erase_if(faces, [](const Face& f) { return f.empty(); });
        std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
            if (a.size() != b.size())
                return a.size() > b.size();
            return a < b;
        });
        faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

        std::vector<Face> kept;
        std::vector<std::vector<std::uint32_t>> by_vertex(table_size);
        for (auto& f : faces) {
            const std::vector<std::uint32_t>* rarest = &by_vertex[f.front()];
            for (Vertex v : f)
                if (by_vertex[v].size() < rarest->size())
                    rarest = &by_vertex[v];
            bool dominated = false;
            for (auto idx : *rarest) {
                if (kept[idx].size() > f.size() && is_subset(f, kept[idx])) {
                    dominated = true;
                    break;
                }
            }
            if (dominated)
                continue;
            const auto idx = static_cast<std::uint32_t>(kept.size());
            for (Vertex v : f)
                by_vertex[v].push_back(idx);
            kept.push_back(std::move(f));
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

private:
    void build_incidence()
    {
        incidence_.assign(labels_.size(), {});
        for (std::uint32_t i = 0; i < facets_.size(); ++i)
            for (Vertex v : facets_[i]) {
                if (v >= labels_.size())
                    throw InvalidArgument("Complex: vertex index outside the vertex table");
                incidence_[v].push_back(i);
            }
    }

    std::vector<std::string> labels_;
    std::vector<Face> facets_;
    std::vector<std::vector<std::uint32_t>> incidence_;
};

/// Clique complex of a graph: facets are the maximal cliques.
inline Complex clique_complex(const Graph& graph, std::vector<std::string> labels)
{
    if (labels.size() != graph.size())
        throw InvalidArgument("clique_complex: label count differs from graph size");
    return Complex::from_facets(std::move(labels), graph.maximal_cliques());
}

inline Complex clique_complex(const Graph& graph)
{
    std::vector<std::string> labels;
    for (std::size_t v = 0; v < graph.size(); ++v)
        labels.push_back(std::to_string(v));
    return clique_complex(graph, std::move(labels));
}

/// 1-skeleton of a complex as a graph over its vertex table.
inline Graph one_skeleton(const Complex& x)
{
    Graph g(x.table_size());
    for (const auto& f : x.facets())
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                if (!g.adjacent(f[i], f[j]))
                    g.add_edge(f[i], f[j]);
    return g;
}

/// All d-dimensional faces, each once, in lexicographic order.
inline std::vector<Face> faces_of_dim(const Complex& x, int d)
{
    if (d < 0)
        throw InvalidArgument("faces_of_dim: dimension must be non-negative");
    const std::size_t k = static_cast<std::size_t>(d) + 1;
    std::vector<Face> out;
    Face current;
    current.reserve(k);
    for (const auto& facet : x.facets()) {
        if (facet.size() < k)
            continue;
        // Enumerate k-subsets of the facet by index combinations.
        std::vector<std::size_t> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            current.clear();
            for (auto p : pick)
                current.push_back(facet[p]);
            out.push_back(current);
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == facet.size() - k + (i - 1))
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Faces grouped by dimension 0..dim(X).
inline std::vector<std::vector<Face>> faces_by_dim(const Complex& x)
{
    std::vector<std::vector<Face>> out;
    for (int d = 0; d <= x.dimension(); ++d)
        out.push_back(faces_of_dim(x, d));
    return out;
}

inline std::vector<std::size_t> f_vector(const Complex& x)
{
    std::vector<std::size_t> out;
    for (int d = 0; d <= x.dimension(); ++d)
        out.push_back(faces_of_dim(x, d).size());
    return out;
}

inline int dimension(const Complex& x) { return x.dimension(); }

inline bool is_pure(const Complex& x)
{
    const auto& facets = x.facets();
    return std::all_of(facets.begin(), facets.end(),
                       [&](const Face& f) { return f.size() == facets.front().size(); });
}

/// Unreduced Euler characteristic, sum of (-1)^d f_d.
inline long long euler_characteristic(const Complex& x)
{
    long long chi = 0;
    const auto f = f_vector(x);
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(f[d]);
    return chi;
}

/// Connected components, ordered by their smallest vertex.
inline std::vector<Complex> components(const Complex& x)
{
    std::vector<Vertex> parent(x.table_size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (const auto& f : x.facets())
        for (std::size_t i = 1; i < f.size(); ++i) {
            auto a = find(f[0]);
            auto b = find(f[i]);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<Vertex, std::vector<Face>> groups;
    for (const auto& f : x.facets())
        groups[find(f.front())].push_back(f);
    std::vector<Complex> out;
    for (auto& [root, facets] : groups)
        out.push_back(Complex::from_facets(x.labels(), std::move(facets)));
    return out;
}

inline void require_face(const Complex& x, const Face& sigma, const char* op)
{
    if (!std::is_sorted(sigma.begin(), sigma.end()) || !x.contains(sigma))
        throw InvalidArgument(std::string(op) + ": argument is not a face of the complex");
}

/// st(sigma) = { tau : tau u sigma in X }.
inline Complex star(const Complex& x, const Face& sigma)
{
    require_face(x, sigma, "star");
    std::vector<Face> facets;
    for (const auto& f : x.facets())
        if (is_subset(sigma, f))
            facets.push_back(f);
    return Complex::from_facets(x.labels(), std::move(facets));
}

/// dl(sigma) = { tau : tau n sigma = empty }; sigma may be any vertex set.
inline Complex deletion(const Complex& x, const Face& sigma)
{
    Face sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Face> generators;
    for (const auto& f : x.facets())
        generators.push_back(face_difference(f, sorted));
    return Complex(x.labels(), std::move(generators));
}

/// lk(sigma) = st(sigma) n dl(sigma).
inline Complex link(const Complex& x, const Face& sigma)
{
    require_face(x, sigma, "link");
    std::vector<Face> generators;
    for (const auto& f : x.facets())
        if (is_subset(sigma, f))
            generators.push_back(face_difference(f, sigma));
    return Complex(x.labels(), std::move(generators));
}

/// Faces of X all of whose vertices lie in `keep`.
inline Complex induced(const Complex& x, Face keep)
{
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    std::vector<Face> generators;
    for (const auto& f : x.facets())
        generators.push_back(face_intersection(f, keep));
    return Complex(x.labels(), std::move(generators));
}

/// Faces common to both complexes (same vertex table).
inline Complex intersection(const Complex& a, const Complex& b)
{
    if (a.table_size() != b.table_size())
        throw InvalidArgument("intersection: complexes use different vertex tables");
    std::vector<Face> generators;
    for (const auto& f : a.facets())
        for (const auto& g : b.facets()) {
            auto common = face_intersection(f, g);
            if (!common.empty())
                generators.push_back(std::move(common));
        }
    return Complex(a.labels(), std::move(generators));
}

/// Faces lying in at least one of the complexes.
inline Complex complex_union(std::span<const Complex> parts)
{
    if (parts.empty())
        return Complex();
    std::vector<Face> generators;
    for (const auto& p : parts) {
        if (p.table_size() != parts.front().table_size())
            throw InvalidArgument("complex_union: complexes use different vertex tables");
        generators.insert(generators.end(), p.facets().begin(), p.facets().end());
    }
    return Complex(parts.front().labels(), std::move(generators));
}

/// Every face of `a` is a face of `b`.
inline bool is_subcomplex(const Complex& a, const Complex& b)
{
    return std::all_of(a.facets().begin(), a.facets().end(),
                       [&](const Face& f) { return b.contains(f); });
}

/// st(sigma) n st(tau), defined when sigma u tau is a face. In a clique complex
/// this coincides with st(sigma u tau).
inline Complex star_intersection(const Complex& x, const Face& sigma, const Face& tau)
{
    if (!x.contains(face_union(sigma, tau)))
        throw InvalidArgument("star_intersection: sigma u tau is not a face");
    return intersection(star(x, sigma), star(x, tau));
}

/// Cone points: vertices v with sigma u {v} in X for all faces sigma, i.e. the
/// vertices common to every facet.
inline std::vector<Vertex> cone_faces(const Complex& x)
{
    if (x.empty())
        return {};
    Face common = x.facets().front();
    for (const auto& f : x.facets())
        common = face_intersection(common, f);
    return common;
}

/// Subcomplex generated by the codimension-one faces lying in exactly one facet.
/// Requires a pure complex.
inline Complex boundary_subcomplex(const Complex& x)
{
    if (!is_pure(x))
        throw InvalidArgument("boundary_subcomplex: complex is not pure");
    if (x.dimension() <= 0)
        return Complex(x.labels(), {});
    std::map<Face, int> ridge_degree;
    for (const auto& f : x.facets())
        for (std::size_t i = 0; i < f.size(); ++i) {
            Face ridge = f;
            ridge.erase(ridge.begin() + static_cast<std::ptrdiff_t>(i));
            ++ridge_degree[ridge];
        }
    std::vector<Face> generators;
    for (auto& [ridge, degree] : ridge_degree)
        if (degree == 1)
            generators.push_back(ridge);
    return Complex(x.labels(), std::move(generators));
}

/// An indexed family of subcomplexes of a common parent.
struct Covering {
    std::vector<std::string> names;
    std::vector<Complex> members;
};

inline Complex intersection_of(const Covering& cover, const std::vector<std::size_t>& indices,
                               const Complex& whole)
{
    Complex acc = whole;
    for (auto i : indices)
        acc = intersection(acc, cover.members.at(i));
    return acc;
}

/// Nerve: simplicial complex on the index set whose faces are the index sets
/// with nonempty common intersection.
inline Complex nerve(const Covering& cover)
{
    const std::size_t m = cover.members.size();
    std::vector<std::string> labels = cover.names;
    if (labels.size() != m) {
        labels.clear();
        for (std::size_t i = 0; i < m; ++i)
            labels.push_back(std::to_string(i));
    }
    std::vector<Face> generators;
    Face current;
    // Depth-first over increasing index sets; intersections only shrink.
    auto extend = [&](auto&& self, std::size_t next, const Complex& common) -> void {
        for (std::size_t i = next; i < m; ++i) {
            Complex narrowed = current.empty() ? cover.members[i] : intersection(common, cover.members[i]);
            if (narrowed.empty())
                continue;
            current.push_back(static_cast<Vertex>(i));
            generators.push_back(current);
            self(self, i + 1, narrowed);
            current.pop_back();
        }
    };
    extend(extend, 0, Complex());
    return Complex(std::move(labels), std::move(generators));
}

/// Boundary of the m-dimensional cross-polytope: m antipodal pairs
/// (2i, 2i+1); facets pick one vertex from each pair.
inline Complex cross_polytope_boundary(int pairs)
{
    if (pairs < 1 || pairs > 20)
        throw InvalidArgument("cross_polytope_boundary: pair count must be in [1, 20]");
    std::vector<std::string> labels;
    for (int i = 0; i < pairs; ++i) {
        labels.push_back("+x" + std::to_string(i + 1));
        labels.push_back("-x" + std::to_string(i + 1));
    }
    std::vector<Face> facets;
    for (std::uint32_t choice = 0; choice < (1u << pairs); ++choice) {
        Face f;
        for (int i = 0; i < pairs; ++i)
            f.push_back(static_cast<Vertex>(2 * i + ((choice >> i) & 1u)));
        facets.push_back(f);
    }
    return Complex::from_facets(std::move(labels), std::move(facets));
}

/// Disjoint union; the second complex's vertex table is appended after the
/// first's.
inline Complex disjoint_union(const Complex& a, const Complex& b)
{
    auto labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    auto facets = a.facets();
    const auto shift = static_cast<Vertex>(a.table_size());
    for (auto f : b.facets()) {
        for (auto& v : f)
            v += shift;
        facets.push_back(std::move(f));
    }
    return Complex::from_facets(std::move(labels), std::move(facets));
}

/// Full simplex on k vertices.
inline Complex simplex(std::size_t k)
{
    std::vector<std::string> labels;
    Face f;
    for (std::size_t i = 0; i < k; ++i) {
        labels.push_back(std::to_string(i));
        f.push_back(static_cast<Vertex>(i));
    }
    return Complex(std::move(labels), {f});
}

}  // namespace sepcx
