#pragma once

// Named verifications. Each returns report rows; reproduce_paper runs them in
// a fixed order so the JSON output is byte-identical across runs.

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sepcx/boundary_study.hpp"
#include "sepcx/collapse.hpp"
#include "sepcx/covering.hpp"
#include "sepcx/homology.hpp"
#include "sepcx/isomorphism.hpp"
#include "sepcx/report.hpp"
#include "sepcx/separation_complex.hpp"

namespace sepcx {

struct CheckOptions {
    int cap = default_enumeration_cap;
    /// Permits boundaries of the strong complex at n = 6.
    bool allow_heavy = false;
    /// Additionally permits the weak boundary at n = 6.
    bool force = false;
    /// Top faces sampled by the pi' chain and carrier checks for n >= 6.
    std::size_t pi_sample = 2000;
    std::uint64_t seed = 1;
};

namespace detail {

template <class Range>
std::string tuple_string(const Range& values)
{
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (const auto& v : values) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << ')';
    return os.str();
}

// Labels shortest first, then lexicographic: {15,234}.
inline std::vector<std::string> sorted_labels(const Complex& x, const Face& f)
{
    std::vector<std::string> labels;
    for (Vertex v : f)
        labels.push_back(x.label(v));
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
        return std::pair(a.size(), a) < std::pair(b.size(), b);
    });
    return labels;
}

inline std::string face_string(const Complex& x, const Face& f)
{
    std::string out = "{";
    for (const auto& label : sorted_labels(x, f))
        out += (out.size() > 1 ? "," : "") + label;
    return out + "}";
}

inline std::string name(Relation r, int n) { return to_string(r) + std::to_string(n); }

inline std::string bool_string(bool b) { return b ? "yes" : "no"; }

inline std::string violations_string(const ViolationCount& v)
{
    return std::to_string(v.violations) + " violations";
}

inline std::string scope_string(const ViolationCount& v, const std::string& what)
{
    return std::to_string(v.checked) + " " + what + (v.sampled ? " (fixed-seed sample)" : " (exhaustive)");
}

inline std::string witness_string(const Complex& x, const ViolationCount& v)
{
    if (!v.witness)
        return {};
    std::string out;
    for (const auto& f : *v.witness) {
        if (!out.empty())
            out += " <= ";
        out += face_string(x, f);
    }
    return out;
}

// One row per degree 0..max(dim, expected size - 1), "H~d(<what>) = group".
inline void homology_rows(Report& r, const std::string& what, const std::string& scope,
                          const std::vector<HomologyGroup>& computed, const std::vector<HomologyGroup>& expected)
{
    const std::size_t top = std::max(computed.size(), expected.size());
    for (std::size_t d = 0; d < top; ++d) {
        const HomologyGroup c = d < computed.size() ? computed[d] : HomologyGroup{};
        const HomologyGroup e = d < expected.size() ? expected[d] : HomologyGroup{};
        r.expect("H~" + std::to_string(d) + "(" + what + ")", scope, to_string(e), to_string(c));
    }
}

inline std::vector<HomologyGroup> groups_with(std::size_t size, std::vector<std::pair<std::size_t, std::size_t>> ranks)
{
    std::vector<HomologyGroup> out(size);
    for (auto [d, rank] : ranks)
        out.at(d).rank = rank;
    return out;
}

inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i)
        out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return out;
}

}  // namespace detail

/// Vertices and edges of both complexes at n = 3.
inline Report check_figure_1()
{
    Report r;
    for (Relation rel : {Relation::weak, Relation::strong}) {
        const auto x = build(3, rel);
        std::string labels;
        for (Vertex v : x.complex.vertices())
            labels += (labels.empty() ? "" : ", ") + x.complex.label(v);
        r.expect("vertices(" + detail::name(rel, 3) + ")", "figure 1", "2, 13", labels);
        r.expect("edges(" + detail::name(rel, 3) + ")", "figure 1", "0",
                 std::to_string(faces_of_dim(x.complex, 1).size()));
    }
    return r;
}

/// f-vectors at n = 4 and the single weak edge missing from the strong complex.
inline Report check_figure_2()
{
    Report r;
    const auto ss = build(4, Relation::strong);
    const auto ws = build(4, Relation::weak);
    r.expect("f-vector(ss4)", "figure 2", "(8,16,8)", detail::tuple_string(f_vector(ss.complex)));
    r.expect("f-vector(ws4)", "figure 2", "(8,17,10)", detail::tuple_string(f_vector(ws.complex)));
    r.expect("euler characteristic(ss4)", "figure 2", "0", std::to_string(euler_characteristic(ss.complex)));
    r.expect("euler characteristic(ws4)", "figure 2", "1", std::to_string(euler_characteristic(ws.complex)));
    // Both complexes share the vertex table, so edges compare directly.
    const auto ss_edges = faces_of_dim(ss.complex, 1);
    const auto ws_edges = faces_of_dim(ws.complex, 1);
    r.expect("ss4 edges within ws4 edges", "figure 2", "yes",
             detail::bool_string(std::includes(ws_edges.begin(), ws_edges.end(), ss_edges.begin(), ss_edges.end())));
    std::vector<Face> extra;
    std::set_difference(ws_edges.begin(), ws_edges.end(), ss_edges.begin(), ss_edges.end(), std::back_inserter(extra));
    std::string computed;
    for (const auto& e : extra)
        computed += (computed.empty() ? "" : " ") + detail::face_string(ws.complex, e);
    r.expect("ws4 edges not in ss4", "figure 2", "{14,23}", computed);
    return r;
}

/// Vertex count 2^n - 2n and edge containment ss in ws.
inline Report check_vertex_counts(int n, const CheckOptions& opt = {})
{
    Report r;
    check_cap(n, opt.cap);
    const auto ss = separation_graph(GroundSize(n), Relation::strong);
    const auto ws = separation_graph(GroundSize(n), Relation::weak);
    const long long expected = n >= 3 ? (1LL << n) - 2LL * n : 0;
    r.expect("vertex count(n=" + std::to_string(n) + ")", "2^n - 2n", std::to_string(expected),
             std::to_string(ss.vertices.size()));
    bool contained = ss.vertices == ws.vertices;
    for (const auto& [a, b] : ss.graph.edges())
        contained = contained && ws.graph.adjacent(a, b);
    r.expect("ss" + std::to_string(n) + " edges within ws" + std::to_string(n) + " edges", "edge sets", "yes",
             detail::bool_string(contained));
    return r;
}

/// The greedy collapser rebuilds the complex per step; ws6 takes too long.
inline constexpr int max_collapse_n = 5;

/// Weak complex: trivial reduced homology and a collapse certificate.
inline Report check_contractible(int n, const CheckOptions& opt = {})
{
    Report r;
    const auto x = build(n, Relation::weak, opt.cap);
    const auto h = reduced_homology(x.complex);
    r.expect("reduced homology(ws" + std::to_string(n) + ")", "all degrees", "trivial",
             homology_trivial(h) ? "trivial" : homology_line(h));
    if (n > max_collapse_n) {
        r.skipped("greedy collapse(ws" + std::to_string(n) + ")", "certificate",
                  "collapse search runs for n <= " + std::to_string(max_collapse_n));
        return r;
    }
    const auto c = greedy_collapse(x.complex);
    ReportRow row{"greedy collapse(ws" + std::to_string(n) + ")", "certificate", to_string(CollapseOutcome::Status::collapsed_to_point),
                  to_string(c.status), Status::pass, ""};
    if (!c.collapsed()) {
        // A stuck collapse proves nothing; only n = 4 is required to collapse.
        row.status = n == 4 ? Status::fail : Status::inconclusive;
        row.witness = std::to_string(c.remaining_facets) + " facets remain";
    }
    r.add(row);
    return r;
}

/// Strong complex: reduced homology of a sphere of dimension n - 3.
inline Report check_sphere(int n, const CheckOptions& opt = {})
{
    Report r;
    const auto x = build(n, Relation::strong, opt.cap);
    const auto h = reduced_homology(x.complex);
    auto expected = detail::groups_with(h.size(), {});
    if (static_cast<std::size_t>(n - 3) < expected.size())
        expected[static_cast<std::size_t>(n - 3)].rank = 1;
    detail::homology_rows(r, "ss" + std::to_string(n), "sphere of dimension n-3", h, expected);
    return r;
}

/// Both complexes pure of dimension C(n-1, 2) - 1.
inline Report check_purity(int n, const CheckOptions& opt = {})
{
    Report r;
    const std::string expected = std::to_string(static_cast<long long>(detail::binomial(n - 1, 2)) - 1);
    for (Relation rel : {Relation::strong, Relation::weak}) {
        const auto x = build(n, rel, opt.cap);
        r.expect("dimension(" + detail::name(rel, n) + ")", "C(n-1,2)-1", expected, std::to_string(x.complex.dimension()));
        r.expect("pure(" + detail::name(rel, n) + ")", "all facets", "yes", detail::bool_string(is_pure(x.complex)));
    }
    return r;
}

/// K(n) against the abstract cross-polytope boundary, and its homology.
inline Report check_cross_polytope(int n, const CheckOptions& opt = {})
{
    Report r;
    const auto k = cross_polytope_K(n, opt.cap);
    const auto abstract = cross_polytope_boundary(n - 2);
    const auto iso = isomorphic(k.k, abstract);
    r.expect("K(" + std::to_string(n) + ") isomorphic to cross-polytope boundary", "isomorphism search", "yes",
             detail::bool_string(iso.has_value()));
    bool antipodal = true;
    for (auto [a, b] : k.pairs)
        antipodal = antipodal && !k.k.contains(Face{std::min(a, b), std::max(a, b)});
    r.expect("K(" + std::to_string(n) + ") complementary pairs non-adjacent", "pairs", "yes", detail::bool_string(antipodal));
    const auto h = reduced_homology(k.k);
    std::vector<HomologyGroup> expected(h.size());
    if (static_cast<std::size_t>(n - 3) < expected.size())
        expected[static_cast<std::size_t>(n - 3)].rank = 1;
    detail::homology_rows(r, "K" + std::to_string(n), "sphere of dimension n-3", h, expected);
    return r;
}

inline Report check_pi_nonempty(int n, const CheckOptions& opt = {})
{
    Report r;
    const auto v = verify_lemma_4_4(n, opt.cap);
    const auto x = build(n, Relation::strong, opt.cap);
    r.expect("pi' nonempty(ss" + std::to_string(n) + ")", detail::scope_string(v, "faces"), "0 violations",
             detail::violations_string(v), detail::witness_string(x.complex, v));
    return r;
}

inline Report check_pi_chain(int n, const CheckOptions& opt = {})
{
    Report r;
    const std::optional<std::size_t> sample = n >= 6 ? std::optional<std::size_t>(opt.pi_sample) : std::nullopt;
    const auto v = verify_pi_chain_condition(n, sample, opt.cap, opt.seed);
    const auto x = build(n, Relation::strong, opt.cap);
    r.expect("pi' chain condition(ss" + std::to_string(n) + ")", detail::scope_string(v, "comparable pairs"),
             "0 violations", detail::violations_string(v), detail::witness_string(x.complex, v));
    return r;
}

inline Report check_pi_carrier(int n, const CheckOptions& opt = {})
{
    Report r;
    const std::optional<std::size_t> sample = n >= 6 ? std::optional<std::size_t>(opt.pi_sample) : std::nullopt;
    const auto v = verify_pi_carrier(n, sample, opt.cap, opt.seed);
    const auto x = build(n, Relation::strong, opt.cap);
    r.expect("pi' carrier containment(ss" + std::to_string(n) + ")", detail::scope_string(v, "comparable pairs"),
             "0 violations", detail::violations_string(v), detail::witness_string(x.complex, v));
    return r;
}

inline Report check_pi_on_K(int n, const CheckOptions& opt = {})
{
    Report r;
    const auto x = build(n, Relation::strong, opt.cap);
    const auto images = verify_pi_images_in_K(n, opt.cap);
    r.expect("pi' images are faces of K(ss" + std::to_string(n) + ")", detail::scope_string(images, "faces"),
             "0 violations", detail::violations_string(images), detail::witness_string(x.complex, images));
    const auto identity = verify_pi_identity_on_K(n, opt.cap);
    r.expect("pi' identity on K(ss" + std::to_string(n) + ")", detail::scope_string(identity, "faces of K"),
             "0 violations", detail::violations_string(identity), detail::witness_string(x.complex, identity));
    return r;
}

inline Report check_equivariance(int n, Relation rel, const CheckOptions& opt = {})
{
    Report r;
    for (const auto& e : verify_equivariance(n, rel, opt.cap)) {
        std::string computed = "vertices " + detail::bool_string(e.vertices_preserved) + ", facets "
            + detail::bool_string(e.facets_preserved) + ", K " + detail::bool_string(e.k_preserved);
        std::string expected = "vertices yes, facets yes, K yes";
        if (e.pi_equivariant) {
            computed += ", pi' " + detail::bool_string(*e.pi_equivariant);
            expected += ", pi' yes";
        }
        r.expect("equivariance(" + detail::name(rel, n) + ", g=" + to_string(e.element) + ")",
                 "group action", expected, computed,
                 e.pi_violations ? std::to_string(e.pi_violations) + " pi' violations" : "");
    }
    return r;
}

/// The deletion covering of the weak complex and all its intersections.
inline Report check_ws_cover(int n, const CheckOptions& opt = {})
{
    Report r;
    const auto rep = verify_ws_cover_intersections(n, 5, opt.cap);
    const std::string tag = "ws" + std::to_string(n);
    const std::string all = std::to_string(rep.intersections.size()) + " intersections";
    r.expect("dl-covering union(" + tag + ")", "covering", "yes", detail::bool_string(rep.union_is_parent));
    r.expect("dl-covering G-invariant(" + tag + ")", "covering", "yes", detail::bool_string(rep.g_invariant));
    r.expect("dl-covering nerve is a simplex(" + tag + ")", "nerve", "yes", detail::bool_string(rep.nerve_is_simplex));
    r.expect("empty intersections(" + tag + ")", all, "0", std::to_string(rep.empty_count()));
    r.expect("homologically nontrivial intersections(" + tag + ")", all, "0", std::to_string(rep.nontrivial_count()));
    r.expect("intersections missing st({1n,23..(n-1)})(" + tag + ")", all, "0",
             std::to_string(rep.missing_center_star()));
    ReportRow collapse{"intersections not collapsed(" + tag + ")", all, "0",
                       std::to_string(rep.inconclusive_collapses()), Status::pass, ""};
    if (rep.inconclusive_collapses() > 0)
        collapse.status = Status::inconclusive;
    r.add(collapse);
    return r;
}

/// Star coverings of every no-free-pair intersection: cone points exist and
/// the predicted ones are among them.
inline Report check_star_covers(int n, const CheckOptions& opt = {})
{
    Report r;
    const std::string tag = "ws" + std::to_string(n);
    std::size_t sets = 0, intersections = 0, not_covering = 0, bad_nerve = 0, lacking = 0, unconfirmed = 0;
    std::size_t first_alternative = 0, second_alternative = 0, both_alternatives = 0;
    std::string witness;
    const GroundSize gn(n);
    for (const auto& sigma : no_free_pair_index_sets(n)) {
        const auto rep = star_cover_cone_points(n, sigma, opt.cap);
        ++sets;
        intersections += rep.intersections.size();
        not_covering += rep.covers ? 0 : 1;
        bad_nerve += rep.nerve_is_simplex ? 0 : 1;
        lacking += rep.lacking_cone_point();
        unconfirmed += rep.unconfirmed_predictions();
        for (const auto& e : rep.intersections) {
            if (e.nonempty && e.cone_points.empty() && witness.empty())
                witness = "index set " + detail::tuple_string(sigma);
            for (const auto& group : e.predictions) {
                if (group.size() != 2)
                    continue;
                const bool a = group[0].second, b = group[1].second;
                first_alternative += a && !b;
                second_alternative += b && !a;
                both_alternatives += a && b;
            }
        }
    }
    const std::string scope = std::to_string(sets) + " index sets, " + std::to_string(intersections) + " star intersections";
    r.expect("star covers covering(" + tag + ")", scope, "0 failures", std::to_string(not_covering) + " failures");
    r.expect("star cover nerves are simplices(" + tag + ")", scope, "0 failures", std::to_string(bad_nerve) + " failures");
    r.expect("star intersections without cone point(" + tag + ")", scope, "0", std::to_string(lacking), witness);
    r.expect("case-analysis cone points not found(" + tag + ")", scope, "0", std::to_string(unconfirmed));
    r.info("two-way predictions (1r or rn): only first, only second, both(" + tag + ")", scope,
           std::to_string(first_alternative) + ", " + std::to_string(second_alternative) + ", "
               + std::to_string(both_alternatives));
    return r;
}

/// Boundary homology at n = 5, links of the non-manifold witnesses and the
/// shapes of two specific links.
inline Report check_boundaries_5(const CheckOptions& opt = {})
{
    Report r;
    const auto ss = boundary_of(5, Relation::strong, default_boundary_cap, opt.cap);
    const auto ws = boundary_of(5, Relation::weak, default_boundary_cap, opt.cap);

    detail::homology_rows(r, "boundary ss5", "boundary homology", reduced_homology(ss.boundary),
                          detail::groups_with(5, {{2, 1}, {3, 9}, {4, 1}}));
    detail::homology_rows(r, "boundary ws5", "boundary homology", reduced_homology(ws.boundary),
                          detail::groups_with(5, {{2, 1}, {4, 1}}));
    r.info("f-vector(boundary ss5)", "boundary", detail::tuple_string(f_vector(ss.boundary)));
    r.info("f-vector(boundary ws5)", "boundary", detail::tuple_string(f_vector(ws.boundary)));

    for (const char* v : {"15", "234"}) {
        const auto lk = link_in_boundary(ws, {v});
        const auto h = reduced_homology(lk);
        for (std::size_t d : {std::size_t{1}, std::size_t{3}})
            r.expect("H~" + std::to_string(d) + "(lk(" + v + ") in boundary ws5)", "vertex link", "Z",
                     to_string(d < h.size() ? h[d] : HomologyGroup{}));
    }
    {
        const auto lk = link_in_boundary(ws, {"15", "234"});
        r.expect("f-vector(lk({15,234}) in boundary ws5)", "edge link", "(12,24,16)", detail::tuple_string(f_vector(lk)));
        r.expect("components(lk({15,234}) in boundary ws5)", "edge link", "2", std::to_string(components(lk).size()));
        r.expect("lk({15,234}) in boundary ws5 is two octahedron boundaries", "isomorphism search", "yes",
                 detail::bool_string(components_isomorphic_to(lk, cross_polytope_boundary(3), 2)
                                     && isomorphic(lk, two_octahedra()).has_value()));
    }
    {
        const auto bad_edges = non_sphere_links(ws.boundary, 1);
        std::string computed;
        for (const auto& e : bad_edges)
            computed += (computed.empty() ? "" : " ") + detail::face_string(ws.boundary, e);
        r.expect("edges of boundary ws5 whose link is not a homology 2-sphere", "all edges", "{15,234}", computed);
    }
    {
        const auto lk = link_in_boundary(ss, {"2", "23", "234"});
        const auto h = reduced_homology(lk);
        r.expect("f-vector(lk({2,23,234}) in boundary ss5)", "face link", "(8,8)", detail::tuple_string(f_vector(lk)));
        r.expect("components(lk({2,23,234}) in boundary ss5)", "face link", "2", std::to_string(components(lk).size()));
        detail::homology_rows(r, "lk({2,23,234}) in boundary ss5", "face link", h,
                              detail::groups_with(2, {{0, 1}, {1, 2}}));
        r.expect("lk({2,23,234}) in boundary ss5 is two 4-cycles", "isomorphism search", "yes",
                 detail::bool_string(components_isomorphic_to(lk, cross_polytope_boundary(2), 2)
                                     && isomorphic(lk, two_four_cycles()).has_value()));
        r.info("vertices(lk({2,23,234}) in boundary ss5)", "face link", detail::face_string(lk, lk.vertices()));
    }
    for (const auto* b : {&ss, &ws}) {
        const std::string tag = "boundary " + detail::name(b->parent.relation(), 5);
        const auto bad = non_sphere_links(b->boundary, 0);
        r.expect(tag + " is a homology manifold", "vertex links", "no", detail::bool_string(bad.empty()));
        r.info("vertex links of " + tag + " lacking 3-sphere homology", "vertex links", std::to_string(bad.size()));
    }
    {
        std::string computed;
        for (const auto& v : non_sphere_links(ws.boundary, 0))
            computed += (computed.empty() ? "" : " ") + detail::face_string(ws.boundary, v);
        r.info("vertices of boundary ws5 whose link is not a homology 3-sphere", "vertex links", computed);
    }
    return r;
}

/// Boundary homology at n = 6. No expected values exist; results are INFO.
inline Report check_boundaries_6(const CheckOptions& opt = {})
{
    Report r;
    for (Relation rel : {Relation::strong, Relation::weak}) {
        const std::string tag = "boundary " + detail::name(rel, 6);
        const bool permitted = rel == Relation::strong ? opt.allow_heavy : (opt.allow_heavy && opt.force);
        if (!permitted) {
            r.skipped("H~(" + tag + ")", "boundary homology",
                      rel == Relation::strong ? "needs --allow-heavy" : "needs --allow-heavy and --force");
            continue;
        }
        const auto b = boundary_of(6, rel, 6, opt.cap);
        r.info("f-vector(" + tag + ")", "boundary", detail::tuple_string(f_vector(b.boundary)));
        r.info("H~(" + tag + ")", "boundary homology", homology_line(reduced_homology(b.boundary)));
    }
    return r;
}

/// Properties of the separation predicates and frozen sets, exhaustive over
/// all pairs of subsets of [n].
inline Report check_predicates(int n)
{
    Report r;
    const GroundSize gn(n);
    std::size_t pairs = 0, asymmetric = 0, ss_not_ws = 0, not_invariant = 0, frozen_mismatch = 0;
    for (std::uint32_t a = 0; a < gn.subset_count(); ++a) {
        const SubsetMask sa(gn, a);
        for (Relation rel : {Relation::strong, Relation::weak})
            frozen_mismatch += is_frozen(sa, rel) != is_frozen_by_definition(sa, rel);
        for (std::uint32_t b = 0; b < gn.subset_count(); ++b) {
            const SubsetMask sb(gn, b);
            ++pairs;
            const bool s = strongly_separated(sa, sb), w = weakly_separated(sa, sb);
            asymmetric += s != strongly_separated(sb, sa) || w != weakly_separated(sb, sa);
            ss_not_ws += s && !w;
            for (GroupElement g : all_group_elements)
                not_invariant += s != strongly_separated(act(g, sa), act(g, sb))
                    || w != weakly_separated(act(g, sa), act(g, sb));
        }
    }
    const std::string scope = std::to_string(pairs) + " ordered pairs, n=" + std::to_string(n);
    r.expect("asymmetric separation pairs(n=" + std::to_string(n) + ")", scope, "0", std::to_string(asymmetric));
    r.expect("strongly but not weakly separated pairs(n=" + std::to_string(n) + ")", scope, "0",
             std::to_string(ss_not_ws));
    r.expect("pairs where G changes separation(n=" + std::to_string(n) + ")", scope, "0", std::to_string(not_invariant));
    r.expect("frozen closed form vs definition mismatches(n=" + std::to_string(n) + ")",
             std::to_string(gn.subset_count()) + " subsets", "0", std::to_string(frozen_mismatch));
    return r;
}

struct ReproduceOptions {
    int nmax = 5;
    CheckOptions checks;
};

/// Every check, in order: small figures, vertex counts, contractibility and
/// sphere shadows, purity, K, pi', equivariance, the covering machinery and
/// the boundary computations.
inline Report reproduce_paper(const ReproduceOptions& opt, const std::function<void(const std::string&)>& progress = {})
{
    if (opt.nmax < 4)
        throw InvalidArgument("reproduce-paper: --n must be at least 4");
    check_cap(opt.nmax, opt.checks.cap);
    const auto& c = opt.checks;
    Report r;
    auto stage = [&](const std::string& what, const Report& part) {
        if (progress)
            progress(what);
        r.append(part);
    };
    stage("figure 1", check_figure_1());
    stage("figure 2", check_figure_2());
    for (int n = 3; n <= opt.nmax; ++n)
        stage("vertex counts n=" + std::to_string(n), check_vertex_counts(n, c));
    for (int n = 4; n <= opt.nmax; ++n)
        stage("predicates n=" + std::to_string(n), check_predicates(n));
    for (int n = 4; n <= opt.nmax; ++n)
        stage("weak contractibility n=" + std::to_string(n), check_contractible(n, c));
    for (int n = 4; n <= opt.nmax; ++n)
        stage("strong sphere n=" + std::to_string(n), check_sphere(n, c));
    for (int n = 4; n <= opt.nmax; ++n)
        stage("purity n=" + std::to_string(n), check_purity(n, c));
    for (int n = 4; n <= std::max(opt.nmax, std::min(7, c.cap)); ++n)
        stage("cross-polytope n=" + std::to_string(n), check_cross_polytope(n, c));
    for (int n = 4; n <= opt.nmax; ++n) {
        stage("pi' nonempty n=" + std::to_string(n), check_pi_nonempty(n, c));
        stage("pi' chain n=" + std::to_string(n), check_pi_chain(n, c));
        stage("pi' carrier n=" + std::to_string(n), check_pi_carrier(n, c));
        stage("pi' on K n=" + std::to_string(n), check_pi_on_K(n, c));
    }
    for (int n = 4; n <= opt.nmax; ++n)
        for (Relation rel : {Relation::strong, Relation::weak})
            stage("equivariance " + detail::name(rel, n), check_equivariance(n, rel, c));
    for (int n = 4; n <= std::min(opt.nmax, 5); ++n) {
        stage("dl-covering n=" + std::to_string(n), check_ws_cover(n, c));
        stage("star covers n=" + std::to_string(n), check_star_covers(n, c));
    }
    if (opt.nmax >= 5)
        stage("boundaries n=5", check_boundaries_5(c));
    if (opt.nmax >= 6)
        stage("boundaries n=6", check_boundaries_6(c));
    return r;
}

}  // namespace sepcx
