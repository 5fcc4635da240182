#pragma once

// Clique complexes of the strong and weak separation graphs with frozen
// subsets removed, the cross-polytope subcomplex K spanned by singletons and
// their complements, and the vertex map pi' from faces of the strong complex
// to faces of K.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sepcx/complex.hpp"
#include "sepcx/errors.hpp"
#include "sepcx/subset.hpp"

namespace sepcx {

inline constexpr int default_enumeration_cap = 7;

struct SeparationComplex {
    SeparationGraph graph;
    Complex complex;

    GroundSize n() const { return graph.n; }
    Relation relation() const { return graph.relation; }
    const std::vector<SubsetMask>& masks() const { return graph.vertices; }
    const SubsetMask& mask(Vertex v) const { return graph.vertices.at(v); }

    Vertex vertex(const SubsetMask& s) const
    {
        auto idx = graph.index_of(s);
        if (!idx)
            throw InvalidArgument("subset " + to_string(s) + " is not a vertex of the complex");
        return *idx;
    }

    Vertex vertex(std::string_view subset) const { return vertex(parse_subset(n(), subset)); }

    /// Sorted face from subset strings such as {"15", "234"}.
    Face face(const std::vector<std::string>& subsets) const
    {
        Face out;
        for (const auto& s : subsets)
            out.push_back(vertex(s));
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<std::string> face_labels(const Face& f) const
    {
        std::vector<std::string> out;
        for (Vertex v : f)
            out.push_back(complex.label(v));
        return out;
    }

    /// Vertex permutation induced by a group element.
    std::vector<Vertex> vertex_action(GroupElement g) const
    {
        std::vector<Vertex> out;
        out.reserve(masks().size());
        for (const auto& m : masks())
            out.push_back(vertex(act(g, m)));
        return out;
    }
};

inline void check_cap(int n, int cap)
{
    if (n > cap)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

/// Clique complex of the separation graph on non-frozen subsets of [n]. Void
/// for n <= 2.
inline SeparationComplex build(int n, Relation relation, int cap = default_enumeration_cap)
{
    check_cap(n, cap);
    SeparationComplex out{separation_graph(GroundSize(n), relation), Complex()};
    out.complex = clique_complex(out.graph.graph, out.graph.labels());
    return out;
}

/// Maps a face through a vertex permutation, re-sorting.
inline Face map_face(const Face& f, const std::vector<Vertex>& perm)
{
    Face out;
    out.reserve(f.size());
    for (Vertex v : f)
        out.push_back(perm[v]);
    std::sort(out.begin(), out.end());
    return out;
}

/// K: vertex-induced subcomplex of the strong complex on the singletons {k}
/// and complements [n]\{k}, k = 2..n-1.
struct CrossPolytopeSubcomplex {
    Complex k;
    /// (singleton, complement) vertex pairs for k = 2..n-1.
    std::vector<std::pair<Vertex, Vertex>> pairs;

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        for (auto [a, b] : pairs) {
            out.push_back(a);
            out.push_back(b);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// The complementary vertex pairs of K inside a separation graph.
inline std::vector<std::pair<Vertex, Vertex>> complementary_pairs(const SeparationGraph& g)
{
    const int n = g.n.value();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int k = 2; k <= n - 1; ++k) {
        const auto single = SubsetMask::of(g.n, {k});
        auto a = g.index_of(single);
        auto b = g.index_of(single.complement());
        if (!a || !b)
            throw InvalidArgument("singleton or complement missing from the separation graph");
        pairs.emplace_back(*a, *b);
    }
    return pairs;
}

/// K built from the separation graph alone (no facet enumeration of the
/// whole complex), over the graph's vertex table.
inline CrossPolytopeSubcomplex cross_polytope_K(const SeparationGraph& g)
{
    if (g.n.value() < 4)
        throw InvalidArgument("cross_polytope_K: requires n >= 4");
    if (g.relation != Relation::strong)
        throw InvalidArgument("cross_polytope_K: defined inside the strong separation complex");
    CrossPolytopeSubcomplex out;
    out.pairs = complementary_pairs(g);
    const auto keep = out.vertices();
    const Graph sub = g.graph.induced(keep);
    std::vector<Face> facets;
    for (const auto& clique : sub.maximal_cliques()) {
        Face f;
        for (Vertex local : clique)
            f.push_back(keep[local]);
        facets.push_back(std::move(f));
    }
    out.k = Complex::from_facets(g.labels(), std::move(facets));
    return out;
}

inline CrossPolytopeSubcomplex cross_polytope_K(int n, int cap = default_enumeration_cap)
{
    check_cap(n, cap);
    return cross_polytope_K(separation_graph(GroundSize(n), Relation::strong));
}

struct PiImage {
    Face source;
    Face image;
};

/// Evaluates pi' quickly for many faces of one strong complex. Images are
/// also available as bitmasks over the K slots (slot 2i = singleton of pair i,
/// slot 2i+1 = its complement).
class PiEvaluator {
public:
    explicit PiEvaluator(const SeparationComplex& x) : x_(&x)
    {
        if (x.relation() != Relation::strong)
            throw InvalidArgument("pi': defined on the strong separation complex");
        if (x.n().value() < 4)
            throw InvalidArgument("pi': requires n >= 4");
        const auto pairs = complementary_pairs(x.graph);
        for (auto [a, b] : pairs) {
            slots_.push_back(a);
            slots_.push_back(b);
        }
        const auto& g = x.graph.graph;
        closed_.reserve(g.size());
        for (Vertex v = 0; v < g.size(); ++v) {
            VertexBitset b = g.neighbors(v);
            b.set(v);
            closed_.push_back(std::move(b));
        }
    }

    std::size_t slot_count() const { return slots_.size(); }
    Vertex slot_vertex(std::size_t slot) const { return slots_[slot]; }

    /// Slot mask of K-vertices joinable to sigma (sigma u {v} a face).
    std::uint64_t joinable_slots(const Face& sigma) const
    {
        std::uint64_t out = 0;
        for (std::size_t s = 0; s < slots_.size(); ++s) {
            bool ok = true;
            for (Vertex u : sigma)
                if (!closed_[u].test(slots_[s])) {
                    ok = false;
                    break;
                }
            if (ok)
                out |= std::uint64_t{1} << s;
        }
        return out;
    }

    /// pi'(sigma) as a slot mask: joinable v whose complement is not joinable.
    std::uint64_t image_mask(const Face& sigma) const
    {
        const std::uint64_t j = joinable_slots(sigma);
        const std::uint64_t partner = ((j & even_mask()) << 1) | ((j & odd_mask()) >> 1);
        return j & ~partner;
    }

    Face mask_to_face(std::uint64_t mask) const
    {
        Face out;
        for (std::size_t s = 0; s < slots_.size(); ++s)
            if ((mask >> s) & 1u)
                out.push_back(slots_[s]);
        std::sort(out.begin(), out.end());
        return out;
    }

    std::uint64_t face_to_mask(const Face& f) const
    {
        std::uint64_t out = 0;
        for (std::size_t s = 0; s < slots_.size(); ++s)
            if (std::binary_search(f.begin(), f.end(), slots_[s]))
                out |= std::uint64_t{1} << s;
        return out;
    }

    /// True iff the slot set contains some pair (v, alpha(v)).
    static bool has_complementary_pair(std::uint64_t mask)
    {
        return ((mask >> 1) & mask & even_mask()) != 0;
    }

    bool is_face(const Face& f) const { return x_->graph.graph.is_clique(f); }

private:
    static constexpr std::uint64_t even_mask() { return 0x5555555555555555ull; }
    static constexpr std::uint64_t odd_mask() { return 0xAAAAAAAAAAAAAAAAull; }

    const SeparationComplex* x_;
    std::vector<Vertex> slots_;
    std::vector<VertexBitset> closed_;
};

/// pi'(sigma): K-vertices v with sigma u {v} a face but sigma u {alpha(v)} not.
inline PiImage pi_prime(const SeparationComplex& x, const Face& sigma)
{
    PiEvaluator eval(x);
    if (sigma.empty() || !std::is_sorted(sigma.begin(), sigma.end()) || !x.complex.contains(sigma))
        throw InvalidArgument("pi': argument is not a nonempty face of the strong complex");
    return PiImage{sigma, eval.mask_to_face(eval.image_mask(sigma))};
}

/// Every nonempty subset of a face, as faces.
inline std::vector<Face> nonempty_subfaces(const Face& f)
{
    std::vector<Face> out;
    const std::size_t k = f.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
        Face sub;
        for (std::size_t i = 0; i < k; ++i)
            if ((bits >> i) & 1u)
                sub.push_back(f[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

inline std::vector<Face> all_nonempty_faces(const Complex& x)
{
    std::vector<Face> out;
    for (auto& layer : faces_by_dim(x))
        for (auto& f : layer)
            out.push_back(std::move(f));
    return out;
}

struct ViolationCount {
    std::size_t checked = 0;
    std::size_t violations = 0;
    std::optional<std::vector<Face>> witness;
    bool sampled = false;

    bool holds() const { return violations == 0; }
};

/// Counts faces sigma where every k in 2..n-1 has sigma u {k} and
/// sigma u {[n]\k} both faces or both non-faces, i.e. pi'(sigma) is empty.
/// Zero means pi' is nonempty everywhere.
inline ViolationCount verify_lemma_4_4(int n, int cap = default_enumeration_cap)
{
    if (n < 4)
        throw InvalidArgument("pi' nonemptiness check: not applicable for n < 4");
    const auto x = build(n, Relation::strong, cap);
    PiEvaluator eval(x);
    ViolationCount out;
    for (const auto& sigma : all_nonempty_faces(x.complex)) {
        ++out.checked;
        if (eval.image_mask(sigma) == 0) {
            ++out.violations;
            if (!out.witness)
                out.witness = std::vector<Face>{sigma};
        }
    }
    return out;
}

namespace detail {

// Chooses the faces sigma' whose subfaces are scanned: all of them, or a
// fixed-seed sample when `sample` is set.
inline std::vector<Face> comparable_pair_tops(const Complex& x, std::optional<std::size_t> sample,
                                              std::uint64_t seed, bool& sampled)
{
    auto faces = all_nonempty_faces(x);
    sampled = false;
    if (sample && *sample < faces.size()) {
        std::mt19937_64 rng(seed);
        std::shuffle(faces.begin(), faces.end(), rng);
        faces.resize(*sample);
        std::sort(faces.begin(), faces.end());
        sampled = true;
    }
    return faces;
}

}  // namespace detail

/// Chain condition for pi': for every comparable pair sigma <= sigma',
/// pi'(sigma) u pi'(sigma') has no complementary pair. Any chain violation is
/// already a violation for one comparable pair. Exhaustive unless `sample`
/// limits the number of top faces sigma' scanned.
inline ViolationCount verify_pi_chain_condition(int n, std::optional<std::size_t> sample = std::nullopt,
                                                int cap = default_enumeration_cap, std::uint64_t seed = 1)
{
    if (n < 4)
        throw InvalidArgument("pi' chain condition: not applicable for n < 4");
    const auto x = build(n, Relation::strong, cap);
    PiEvaluator eval(x);
    ViolationCount out;
    for (const auto& top : detail::comparable_pair_tops(x.complex, sample, seed, out.sampled)) {
        const std::uint64_t top_image = eval.image_mask(top);
        for (const auto& sub : nonempty_subfaces(top)) {
            ++out.checked;
            if (PiEvaluator::has_complementary_pair(top_image | eval.image_mask(sub))) {
                ++out.violations;
                if (!out.witness)
                    out.witness = std::vector<Face>{sub, top};
            }
        }
    }
    return out;
}

/// Carrier containment: for every comparable pair sigma <= sigma',
/// sigma u pi'(sigma) u pi'(sigma') is a face of the strong complex.
inline ViolationCount verify_pi_carrier(int n, std::optional<std::size_t> sample = std::nullopt,
                                        int cap = default_enumeration_cap, std::uint64_t seed = 1)
{
    if (n < 4)
        throw InvalidArgument("pi' carrier check: not applicable for n < 4");
    const auto x = build(n, Relation::strong, cap);
    PiEvaluator eval(x);
    ViolationCount out;
    for (const auto& top : detail::comparable_pair_tops(x.complex, sample, seed, out.sampled)) {
        const std::uint64_t top_image = eval.image_mask(top);
        for (const auto& sub : nonempty_subfaces(top)) {
            ++out.checked;
            const Face joined = face_union(sub, eval.mask_to_face(top_image | eval.image_mask(sub)));
            if (!eval.is_face(joined)) {
                ++out.violations;
                if (!out.witness)
                    out.witness = std::vector<Face>{sub, top};
            }
        }
    }
    return out;
}

/// pi' restricted to nonempty faces of K is the identity.
inline ViolationCount verify_pi_identity_on_K(int n, int cap = default_enumeration_cap)
{
    const auto x = build(n, Relation::strong, cap);
    PiEvaluator eval(x);
    const auto k = cross_polytope_K(x.graph);
    ViolationCount out;
    for (const auto& sigma : all_nonempty_faces(k.k)) {
        ++out.checked;
        if (eval.mask_to_face(eval.image_mask(sigma)) != sigma) {
            ++out.violations;
            if (!out.witness)
                out.witness = std::vector<Face>{sigma};
        }
    }
    return out;
}

/// Every pi' image is a nonempty face of K without complementary pairs.
inline ViolationCount verify_pi_images_in_K(int n, int cap = default_enumeration_cap)
{
    const auto x = build(n, Relation::strong, cap);
    PiEvaluator eval(x);
    const auto k = cross_polytope_K(x.graph);
    ViolationCount out;
    for (const auto& sigma : all_nonempty_faces(x.complex)) {
        ++out.checked;
        const auto mask = eval.image_mask(sigma);
        if (mask == 0 || PiEvaluator::has_complementary_pair(mask) || !k.k.contains(eval.mask_to_face(mask))) {
            ++out.violations;
            if (!out.witness)
                out.witness = std::vector<Face>{sigma};
        }
    }
    return out;
}

struct EquivarianceResult {
    GroupElement element = GroupElement::identity;
    bool vertices_preserved = true;
    bool facets_preserved = true;
    bool k_preserved = true;
    std::optional<bool> pi_equivariant;  // strong relation only
    std::size_t pi_violations = 0;

    bool holds() const
    {
        return vertices_preserved && facets_preserved && k_preserved && pi_equivariant.value_or(true);
    }
};

/// Checks, for each g in G: g permutes the vertices, maps facets to facets,
/// preserves K setwise, and (strong relation) pi'(g sigma) = g pi'(sigma).
inline std::vector<EquivarianceResult> verify_equivariance(int n, Relation relation, int cap = default_enumeration_cap)
{
    const auto x = build(n, relation, cap);
    std::vector<EquivarianceResult> out;
    for (GroupElement g : all_group_elements) {
        EquivarianceResult r;
        r.element = g;
        std::vector<Vertex> perm;
        try {
            perm = x.vertex_action(g);
        } catch (const InvalidArgument&) {
            r.vertices_preserved = false;
            r.facets_preserved = false;
            r.k_preserved = false;
            out.push_back(r);
            continue;
        }
        {
            auto sorted = perm;
            std::sort(sorted.begin(), sorted.end());
            r.vertices_preserved = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        }
        for (const auto& f : x.complex.facets())
            if (!std::binary_search(x.complex.facets().begin(), x.complex.facets().end(), map_face(f, perm))) {
                r.facets_preserved = false;
                break;
            }
        if (n >= 4) {
            auto kverts = Face();
            for (auto [a, b] : complementary_pairs(x.graph)) {
                kverts.push_back(a);
                kverts.push_back(b);
            }
            std::sort(kverts.begin(), kverts.end());
            r.k_preserved = map_face(kverts, perm) == kverts;
            if (relation == Relation::strong) {
                PiEvaluator eval(x);
                for (const auto& sigma : all_nonempty_faces(x.complex)) {
                    const Face lhs = eval.mask_to_face(eval.image_mask(map_face(sigma, perm)));
                    const Face rhs = map_face(eval.mask_to_face(eval.image_mask(sigma)), perm);
                    if (lhs != rhs)
                        ++r.pi_violations;
                }
                r.pi_equivariant = r.pi_violations == 0;
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace sepcx
