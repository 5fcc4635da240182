#pragma once

// The covering of the weak separation complex by the deletions dl(k) and
// dl([n]\k), k = 2..n-1, and the star coverings of its intersections that have
// no free complementary pairs. Everything here checks combinatorial facts
// (covering, nonempty intersections, cone points); homotopy statements are
// only shadowed by homology and collapse certificates.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepcx/collapse.hpp"
#include "sepcx/complex.hpp"
#include "sepcx/homology.hpp"
#include "sepcx/isomorphism.hpp"
#include "sepcx/separation_complex.hpp"

namespace sepcx {

/// Index i of the covering deletes vertex k = 2 + i/2: the singleton when i is
/// even, its complement when i is odd.
struct WsCovering {
    SeparationComplex parent;
    Covering cover;
    std::vector<Vertex> deleted;
    /// action[g][i] = j when g dl_i = dl_j.
    std::array<std::vector<std::size_t>, 4> action;

    std::size_t size() const { return cover.members.size(); }
};

inline WsCovering ws_covering(int n, int cap = default_enumeration_cap)
{
    if (n < 4)
        throw InvalidArgument("ws_covering: requires n >= 4");
    WsCovering out{build(n, Relation::weak, cap), {}, {}, {}};
    const auto& x = out.parent;
    const GroundSize gn(n);
    for (int k = 2; k <= n - 1; ++k) {
        for (const auto& s : {SubsetMask::of(gn, {k}), SubsetMask::of(gn, {k}).complement()}) {
            const Vertex v = x.vertex(s);
            out.deleted.push_back(v);
            out.cover.names.push_back("dl(" + to_string(s) + ")");
            out.cover.members.push_back(deletion(x.complex, {v}));
        }
    }
    for (GroupElement g : all_group_elements) {
        auto& row = out.action[static_cast<std::size_t>(g)];
        for (std::size_t i = 0; i < out.size(); ++i) {
            const SubsetMask image = act(g, x.mask(out.deleted[i]));
            const Vertex w = x.vertex(image);
            row.push_back(static_cast<std::size_t>(
                std::find(out.deleted.begin(), out.deleted.end(), w) - out.deleted.begin()));
        }
    }
    return out;
}

/// Number of k in 2..n-1 with neither dl(k) nor dl([n]\k) among `indices`.
inline std::size_t free_complementary_pairs(const std::vector<std::size_t>& indices, int n)
{
    if (n < 4)
        throw InvalidArgument("free_complementary_pairs: requires n >= 4");
    const std::size_t pairs = static_cast<std::size_t>(n - 2);
    std::vector<bool> used(pairs, false);
    for (auto i : indices) {
        if (i >= 2 * pairs)
            throw InvalidArgument("free_complementary_pairs: index outside the covering");
        used[i / 2] = true;
    }
    return static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
}

inline std::vector<std::size_t> indices_of_bits(std::uint64_t bits, std::size_t width)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < width; ++i)
        if ((bits >> i) & 1u)
            out.push_back(i);
    return out;
}

/// The edge {1n, 23...(n-1)} of the weak complex.
inline Face center_edge(const SeparationComplex& x)
{
    const GroundSize gn = x.n();
    const int n = gn.value();
    Face f{x.vertex(SubsetMask::of(gn, {1, n})), x.vertex(SubsetMask::interval(gn, 2, n - 1))};
    std::sort(f.begin(), f.end());
    return f;
}

struct CoverIntersection {
    std::vector<std::size_t> indices;
    std::size_t free_pairs = 0;
    bool nonempty = false;
    bool homology_trivial = false;
    CollapseOutcome::Status collapse = CollapseOutcome::Status::stuck;
    bool contains_center_star = false;
};

struct WsCoverReport {
    int n = 0;
    bool union_is_parent = false;
    bool g_invariant = false;
    bool nerve_is_simplex = false;
    std::vector<CoverIntersection> intersections;

    std::size_t empty_count() const { return count_if([](const auto& c) { return !c.nonempty; }); }
    std::size_t nontrivial_count() const { return count_if([](const auto& c) { return !c.homology_trivial; }); }
    std::size_t inconclusive_collapses() const
    {
        return count_if([](const auto& c) { return c.collapse != CollapseOutcome::Status::collapsed_to_point; });
    }
    std::size_t missing_center_star() const { return count_if([](const auto& c) { return !c.contains_center_star; }); }

    bool holds() const
    {
        return union_is_parent && g_invariant && nerve_is_simplex && empty_count() == 0
            && nontrivial_count() == 0 && missing_center_star() == 0;
    }

private:
    template <class Pred>
    std::size_t count_if(Pred pred) const
    {
        return static_cast<std::size_t>(std::count_if(intersections.begin(), intersections.end(), pred));
    }
};

/// True iff applying g to each member yields exactly the member action[g][i].
inline bool covering_is_g_invariant(const WsCovering& c)
{
    for (GroupElement g : all_group_elements) {
        const auto perm = c.parent.vertex_action(g);
        VertexMap map;
        for (Vertex v = 0; v < perm.size(); ++v)
            map[v] = perm[v];
        for (std::size_t i = 0; i < c.size(); ++i) {
            const Complex image = apply_vertex_map(c.cover.members[i], map, c.parent.complex.labels());
            std::size_t matches = 0;
            std::size_t which = 0;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (c.cover.members[j] == image) {
                    ++matches;
                    which = j;
                }
            if (matches != 1 || which != c.action[static_cast<std::size_t>(g)][i])
                return false;
        }
    }
    return true;
}

/// Checks the deletion covering: it covers, is G-invariant, has a simplex as
/// nerve, and every intersection (all 2^|I| index sets, the empty set giving
/// the whole complex) is nonempty, homologically trivial and contains
/// st({1n, 23...(n-1)}). Collapse certificates are attempted and recorded.
inline WsCoverReport verify_ws_cover_intersections(int n, int max_n = 5, int cap = default_enumeration_cap)
{
    if (n > max_n)
        throw CapExceeded("verify_ws_cover_intersections: n = " + std::to_string(n) + " exceeds " + std::to_string(max_n));
    const auto c = ws_covering(n, cap);
    const Complex& whole = c.parent.complex;
    WsCoverReport out;
    out.n = n;
    out.union_is_parent = complex_union(c.cover.members) == whole;
    out.g_invariant = covering_is_g_invariant(c);
    {
        const Complex nv = nerve(c.cover);
        out.nerve_is_simplex = nv.facet_count() == 1 && nv.facets().front().size() == c.size();
    }
    const Complex center = star(whole, center_edge(c.parent));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << c.size()); ++bits) {
        CoverIntersection entry;
        entry.indices = indices_of_bits(bits, c.size());
        entry.free_pairs = free_complementary_pairs(entry.indices, n);
        const Complex common = intersection_of(c.cover, entry.indices, whole);
        entry.nonempty = !common.empty();
        entry.homology_trivial = entry.nonempty && homology_trivial(reduced_homology(common));
        entry.collapse = greedy_collapse(common).status;
        entry.contains_center_star = is_subcomplex(center, common);
        out.intersections.push_back(std::move(entry));
    }
    return out;
}

struct StarCoverIntersection {
    std::vector<std::size_t> members;  // positions in StarCoverReport::centers
    bool nonempty = false;
    std::vector<Vertex> cone_points;
    std::string case_label;
    /// Cone points predicted by the case analysis. Each group lists
    /// alternatives (1r or rn); a group is confirmed when one of them is a
    /// cone point.
    std::vector<std::vector<std::pair<Vertex, bool>>> predictions;

    bool prediction_confirmed() const
    {
        return std::all_of(predictions.begin(), predictions.end(), [](const auto& group) {
            return std::any_of(group.begin(), group.end(), [](const auto& p) { return p.second; });
        });
    }
};

struct StarCoverReport {
    int n = 0;
    std::vector<std::size_t> sigma;
    /// Star centres: 1n, 23..(n-1), then free singletons r, then free complements [n]\s.
    std::vector<Vertex> centers;
    std::vector<std::string> center_labels;
    bool covers = false;
    bool nerve_is_simplex = false;
    std::vector<StarCoverIntersection> intersections;

    std::size_t lacking_cone_point() const
    {
        return static_cast<std::size_t>(std::count_if(intersections.begin(), intersections.end(), [](const auto& e) {
            return e.nonempty && e.cone_points.empty();
        }));
    }
    std::size_t empty_intersections() const
    {
        return static_cast<std::size_t>(
            std::count_if(intersections.begin(), intersections.end(), [](const auto& e) { return !e.nonempty; }));
    }
    std::size_t unconfirmed_predictions() const
    {
        return static_cast<std::size_t>(std::count_if(intersections.begin(), intersections.end(), [](const auto& e) {
            return e.nonempty && !e.prediction_confirmed();
        }));
    }

    bool holds() const { return covers && nerve_is_simplex && lacking_cone_point() == 0; }
};

namespace detail {

enum class CenterKind { one_n, middle, singleton, complement };

}  // namespace detail

/// For an index set sigma of the deletion covering with no free complementary
/// pairs, covers D = intersection of the chosen deletions by the stars (taken
/// inside D) of 1n, 23..(n-1), the singletons r not deleted and the
/// complements [n]\s not deleted, and searches every nonempty intersection of
/// these stars for a cone point. The case analysis predicts particular cone
/// points (r1r2, 1r or rn, [n]\s1s2, [n]\1s or [n]\sn, or the star centres);
/// each prediction is tested and recorded.
inline StarCoverReport star_cover_cone_points(int n, const std::vector<std::size_t>& sigma,
                                              int cap = default_enumeration_cap)
{
    if (n > 5)
        throw CapExceeded("star_cover_cone_points: n > 5 is not supported");
    const auto c = ws_covering(n, cap);
    if (free_complementary_pairs(sigma, n) != 0)
        throw InvalidArgument("star_cover_cone_points: index set has free complementary pairs");
    const auto& x = c.parent;
    const GroundSize gn(n);
    const Complex d = intersection_of(c.cover, sigma, x.complex);

    StarCoverReport out;
    out.n = n;
    out.sigma = sigma;
    std::vector<detail::CenterKind> kinds;
    std::vector<int> element;  // r or s for singleton/complement centres
    auto add_center = [&](const SubsetMask& m, detail::CenterKind kind, int e) {
        out.centers.push_back(x.vertex(m));
        out.center_labels.push_back(to_string(m));
        kinds.push_back(kind);
        element.push_back(e);
    };
    add_center(SubsetMask::of(gn, {1, n}), detail::CenterKind::one_n, 0);
    add_center(SubsetMask::interval(gn, 2, n - 1), detail::CenterKind::middle, 0);
    std::vector<bool> deleted(c.size(), false);
    for (auto i : sigma)
        deleted[i] = true;
    for (int r = 2; r <= n - 1; ++r)
        if (!deleted[static_cast<std::size_t>(2 * (r - 2))])
            add_center(SubsetMask::of(gn, {r}), detail::CenterKind::singleton, r);
    for (int s = 2; s <= n - 1; ++s)
        if (!deleted[static_cast<std::size_t>(2 * (s - 2) + 1)])
            add_center(SubsetMask::of(gn, {s}).complement(), detail::CenterKind::complement, s);

    Covering stars;
    for (std::size_t j = 0; j < out.centers.size(); ++j) {
        stars.names.push_back("st(" + out.center_labels[j] + ")");
        stars.members.push_back(star(d, {out.centers[j]}));
    }
    out.covers = complex_union(stars.members) == d;
    {
        const Complex nv = nerve(stars);
        out.nerve_is_simplex = nv.facet_count() == 1 && nv.facets().front().size() == stars.members.size();
    }

    auto vertex_if_present = [&](const SubsetMask& m) -> std::optional<Vertex> {
        if (is_frozen(m, Relation::weak))
            return std::nullopt;
        return x.vertex(m);
    };

    const std::size_t m = out.centers.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m); ++bits) {
        StarCoverIntersection entry;
        entry.members = indices_of_bits(bits, m);
        const Complex common = intersection_of(stars, entry.members, d);
        entry.nonempty = !common.empty();
        entry.cone_points = cone_faces(common);

        bool has_one_n = false, has_middle = false;
        std::vector<int> singles, comps;
        for (auto j : entry.members) {
            switch (kinds[j]) {
            case detail::CenterKind::one_n: has_one_n = true; break;
            case detail::CenterKind::middle: has_middle = true; break;
            case detail::CenterKind::singleton: singles.push_back(element[j]); break;
            case detail::CenterKind::complement: comps.push_back(element[j]); break;
            }
        }
        std::sort(singles.begin(), singles.end());
        std::sort(comps.begin(), comps.end());
        std::vector<std::vector<Vertex>> predicted;
        auto note = [&](std::string label) {
            if (!entry.case_label.empty())
                entry.case_label += "; ";
            entry.case_label += std::move(label);
        };
        if (!has_one_n && !has_middle) {
            note("case 1: intersection of stars of separated vertices");
            for (auto j : entry.members)
                predicted.push_back({out.centers[j]});
        }
        if (has_one_n) {
            if (singles.size() >= 2) {
                note("case 2.1: r1r2");
                predicted.push_back({x.vertex(SubsetMask::of(gn, {singles[0], singles[1]}))});
            } else if (singles.size() == 1) {
                note("case 2.2: 1r or rn");
                predicted.emplace_back();
                for (const auto& cand : {SubsetMask::of(gn, {1, singles[0]}), SubsetMask::of(gn, {singles[0], n})})
                    if (auto v = vertex_if_present(cand))
                        predicted.back().push_back(*v);
            } else {
                note("case 2.3: 1n");
                predicted.push_back({out.centers[0]});
            }
        }
        if (has_middle) {
            if (comps.size() >= 2) {
                note("case 3.1: [n]\\s1s2");
                predicted.push_back({x.vertex(SubsetMask::of(gn, {comps[0], comps[1]}).complement())});
            } else if (comps.size() == 1) {
                note("case 3.2: [n]\\1s or [n]\\sn");
                predicted.emplace_back();
                for (const auto& cand :
                     {SubsetMask::of(gn, {1, comps[0]}).complement(), SubsetMask::of(gn, {comps[0], n}).complement()})
                    if (auto v = vertex_if_present(cand))
                        predicted.back().push_back(*v);
            } else {
                note("case 3.3: 23..(n-1)");
                predicted.push_back({out.centers[1]});
            }
        }
        for (const auto& group : predicted) {
            auto& checked = entry.predictions.emplace_back();
            for (Vertex v : group)
                checked.emplace_back(v, std::binary_search(entry.cone_points.begin(), entry.cone_points.end(), v));
        }
        out.intersections.push_back(std::move(entry));
    }
    return out;
}

/// All index sets of the deletion covering with no free complementary pairs.
inline std::vector<std::vector<std::size_t>> no_free_pair_index_sets(int n)
{
    std::vector<std::vector<std::size_t>> out;
    const std::size_t width = static_cast<std::size_t>(2 * (n - 2));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << width); ++bits) {
        auto idx = indices_of_bits(bits, width);
        if (free_complementary_pairs(idx, n) == 0)
            out.push_back(std::move(idx));
    }
    return out;
}

}  // namespace sepcx
