#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace sepcx;

namespace {

std::set<std::string> labels_of(const SeparationComplex& x, const Face& f)
{
    std::set<std::string> out;
    for (Vertex v : f)
        out.insert(x.complex.label(v));
    return out;
}

// pi'(sigma) straight from the predicate: v in K with sigma u {v} a face and
// sigma u {alpha(v)} not a face, faces tested pairwise with the oracle.
std::set<std::string> pi_oracle(const SeparationComplex& x, const std::vector<std::uint32_t>& sigma)
{
    const int n = x.n().value();
    auto joinable = [&](std::uint32_t v) {
        for (auto s : sigma)
            if (s != v && !oracle::strongly_separated(s, v, n))
                return false;
        return true;
    };
    std::set<std::string> out;
    const std::uint32_t full = (1u << n) - 1;
    for (int k = 2; k <= n - 1; ++k) {
        const std::uint32_t single = 1u << (k - 1);
        for (std::uint32_t v : {single, full & ~single})
            if (joinable(v) && !joinable(full & ~v))
                out.insert(to_string(SubsetMask(x.n(), v)));
    }
    return out;
}

}  // namespace

TEST_CASE("small builds", "[separation]")
{
    for (auto rel : {Relation::strong, Relation::weak}) {
        const auto x3 = build(3, rel);
        CHECK(x3.complex.facets().size() == 2);
        CHECK(labels_of(x3, x3.complex.vertices()) == std::set<std::string>{"2", "13"});
        CHECK(faces_of_dim(x3.complex, 1).empty());
        CHECK(build(2, rel).complex.empty());
        CHECK(build(1, rel).complex.empty());
    }
    CHECK_THROWS_AS(build(8, Relation::strong), CapExceeded);
    CHECK_NOTHROW(check_cap(8, 8));
}

TEST_CASE("vertex counts, purity, edge containment", "[separation]")
{
    for (int n = 3; n <= 7; ++n) {
        const auto ss = separation_graph(GroundSize(n), Relation::strong);
        const auto ws = separation_graph(GroundSize(n), Relation::weak);
        CHECK(ss.vertices.size() == (std::size_t{1} << n) - 2 * static_cast<std::size_t>(n));
        REQUIRE(ss.vertices == ws.vertices);
        if (n <= 6)
            for (const auto& [a, b] : ss.graph.edges())
                REQUIRE(ws.graph.adjacent(a, b));
    }
    for (int n = 4; n <= 6; ++n)
        for (auto rel : {Relation::strong, Relation::weak}) {
            if (n == 6 && rel == Relation::weak)
                continue;
            const auto x = build(n, rel);
            CHECK(is_pure(x.complex));
            CHECK(x.complex.dimension() == (n - 1) * (n - 2) / 2 - 1);
        }
}

TEST_CASE("graph edges agree with the separation oracle", "[separation][property]")
{
    for (int n = 3; n <= 6; ++n)
        for (auto rel : {Relation::strong, Relation::weak}) {
            const auto g = separation_graph(GroundSize(n), rel);
            for (Vertex a = 0; a < g.vertices.size(); ++a)
                for (Vertex b = a + 1; b < g.vertices.size(); ++b)
                    REQUIRE(g.graph.adjacent(a, b) == oracle::separated(g.vertices[a].bits(), g.vertices[b].bits(), n, rel));
        }
}

TEST_CASE("cross-polytope subcomplex K", "[separation]")
{
    const auto k4 = cross_polytope_K(4);
    std::set<std::string> names;
    for (Vertex v : k4.k.vertices())
        names.insert(k4.k.label(v));
    CHECK(names == std::set<std::string>{"2", "3", "124", "134"});
    CHECK(k4.k.facet_count() == 4);
    for (int n = 4; n <= 7; ++n) {
        const auto k = cross_polytope_K(n);
        CHECK(isomorphic(k.k, cross_polytope_boundary(n - 2)).has_value());
        CHECK(is_sphere_homology(reduced_homology(k.k), static_cast<std::size_t>(n - 3)));
        for (auto [a, b] : k.pairs)
            CHECK_FALSE(k.k.contains({std::min(a, b), std::max(a, b)}));
    }
    CHECK_THROWS_AS(cross_polytope_K(3), InvalidArgument);
    CHECK_THROWS_AS(cross_polytope_K(separation_graph(GroundSize(5), Relation::weak)), InvalidArgument);
}

TEST_CASE("pi' examples", "[separation][pi]")
{
    const auto x = build(4, Relation::strong);
    const auto image = pi_prime(x, {x.vertex("13")});
    CHECK(labels_of(x, image.image) == std::set<std::string>{"3", "134"});
    CHECK(labels_of(x, pi_prime(x, {x.vertex("14")}).image) == std::set<std::string>{"124", "134"});
    CHECK_THROWS_AS(pi_prime(x, {x.vertex("2"), x.vertex("134")}), InvalidArgument);
    CHECK_THROWS_AS(pi_prime(x, {}), InvalidArgument);
    CHECK_THROWS_AS(pi_prime(build(4, Relation::weak), {0}), InvalidArgument);
}

TEST_CASE("pi' agrees with the predicate on every face", "[separation][pi][property]")
{
    for (int n : {4, 5}) {
        const auto x = build(n, Relation::strong);
        for (const auto& f : all_nonempty_faces(x.complex)) {
            std::vector<std::uint32_t> sigma;
            for (Vertex v : f)
                sigma.push_back(x.mask(v).bits());
            const auto image = labels_of(x, pi_prime(x, f).image);
            REQUIRE(image == pi_oracle(x, sigma));
            REQUIRE_FALSE(image.empty());
        }
    }
}

TEST_CASE("pi' verification sweeps", "[separation][pi]")
{
    for (int n : {4, 5}) {
        CHECK(verify_lemma_4_4(n).violations == 0);
        CHECK(verify_pi_chain_condition(n).violations == 0);
        CHECK(verify_pi_carrier(n).violations == 0);
        CHECK(verify_pi_identity_on_K(n).violations == 0);
        CHECK(verify_pi_images_in_K(n).violations == 0);
        CHECK_FALSE(verify_pi_chain_condition(n).sampled);
    }
    CHECK_THROWS_AS(verify_lemma_4_4(3), InvalidArgument);
    const auto sampled = verify_pi_chain_condition(5, 50, default_enumeration_cap, 4);
    CHECK(sampled.sampled);
    CHECK(sampled.violations == 0);
}

TEST_CASE("group action on the complexes", "[separation][equivariance]")
{
    const auto x = build(4, Relation::strong);
    const auto w0 = x.vertex_action(GroupElement::w0);
    CHECK(w0[x.vertex("2")] == x.vertex("3"));
    CHECK(w0[x.vertex("3")] == x.vertex("2"));
    const auto alpha = x.vertex_action(GroupElement::alpha);
    std::vector<Face> mapped;
    for (const auto& f : x.complex.facets())
        mapped.push_back(map_face(f, alpha));
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == x.complex.facets());
    const auto id = x.vertex_action(GroupElement::identity);
    for (Vertex v = 0; v < id.size(); ++v)
        CHECK(id[v] == v);
    for (int n : {4, 5})
        for (auto rel : {Relation::strong, Relation::weak})
            for (const auto& e : verify_equivariance(n, rel)) {
                CHECK(e.holds());
                CHECK(e.pi_equivariant.has_value() == (rel == Relation::strong));
            }
}

TEST_CASE("deletion covering of the weak complex", "[separation][covering]")
{
    const auto c = ws_covering(4);
    CHECK(c.size() == 4);
    CHECK(c.cover.names == std::vector<std::string>{"dl(2)", "dl(134)", "dl(3)", "dl(124)"});
    CHECK(complex_union(c.cover.members) == c.parent.complex);
    const auto nv = nerve(c.cover);
    CHECK(nv.facets() == std::vector<Face>{{0, 1, 2, 3}});
    CHECK(covering_is_g_invariant(c));
    // w0 exchanges dl(2) and dl(3); alpha exchanges dl(2) and dl(134).
    CHECK(c.action[static_cast<std::size_t>(GroupElement::w0)][0] == 2);
    CHECK(c.action[static_cast<std::size_t>(GroupElement::alpha)][0] == 1);
    CHECK_THROWS_AS(ws_covering(3), InvalidArgument);

    CHECK(free_complementary_pairs({}, 5) == 3);
    CHECK(free_complementary_pairs({0, 1, 2, 3}, 4) == 0);
    CHECK(free_complementary_pairs({0}, 4) == 1);
    CHECK_THROWS_AS(free_complementary_pairs({4}, 4), InvalidArgument);

    for (int n : {4, 5}) {
        const auto rep = verify_ws_cover_intersections(n);
        CHECK(rep.holds());
        CHECK(rep.intersections.size() == (std::size_t{1} << (2 * (n - 2))));
        CHECK(rep.intersections.front().indices.empty());
        CHECK(rep.intersections.back().free_pairs == 0);
    }
    CHECK_THROWS_AS(verify_ws_cover_intersections(6), CapExceeded);
}

TEST_CASE("star coverings without free pairs have cone points", "[separation][covering]")
{
    const auto all = star_cover_cone_points(4, {0, 1, 2, 3});
    REQUIRE(all.center_labels.size() == 2);
    CHECK(all.center_labels[0] == "14");
    CHECK(all.center_labels[1] == "23");
    // tau = {st(14), st(23)}: both stars, index bits 0b11.
    const auto& both = all.intersections.at(2);
    CHECK(both.members == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(both.cone_points.empty());
    for (int n : {4, 5})
        for (const auto& sigma : no_free_pair_index_sets(n)) {
            const auto rep = star_cover_cone_points(n, sigma);
            CHECK(rep.holds());
            CHECK(rep.unconfirmed_predictions() == 0);
            for (const auto& e : rep.intersections)
                if (e.members.size() == 1) {
                    const Vertex centre = rep.centers[e.members[0]];
                    CHECK(std::binary_search(e.cone_points.begin(), e.cone_points.end(), centre));
                }
        }
    CHECK_THROWS_AS(star_cover_cone_points(4, {0}), InvalidArgument);
}

TEST_CASE("boundary study at n = 5", "[separation][boundary]")
{
    const auto ss = boundary_of(5, Relation::strong);
    const auto ws = boundary_of(5, Relation::weak);
    auto ranks = [](const Complex& x) {
        std::vector<std::size_t> out;
        for (const auto& g : reduced_homology(x)) {
            CHECK(g.torsion.empty());
            out.push_back(g.rank);
        }
        return out;
    };
    CHECK(ranks(ss.boundary) == std::vector<std::size_t>{0, 0, 1, 9, 1});
    CHECK(ranks(ws.boundary) == std::vector<std::size_t>{0, 0, 1, 0, 1});
    for (const char* v : {"15", "234"})
        CHECK(ranks(link_in_boundary(ws, {v})) == std::vector<std::size_t>{0, 1, 0, 1});
    const auto edge_link = link_in_boundary(ws, {"15", "234"});
    CHECK(f_vector(edge_link) == std::vector<std::size_t>{12, 24, 16});
    CHECK(components_isomorphic_to(edge_link, cross_polytope_boundary(3), 2));
    CHECK(isomorphic(edge_link, two_octahedra()).has_value());
    const auto face_link = link_in_boundary(ss, {"2", "23", "234"});
    CHECK(f_vector(face_link) == std::vector<std::size_t>{8, 8});
    CHECK(isomorphic(face_link, two_four_cycles()).has_value());
    CHECK(non_sphere_links(ws.boundary, 1) == std::vector<Face>{ws.face({"15", "234"})});
    CHECK_THROWS_AS(boundary_of(6, Relation::strong), CapExceeded);
}
