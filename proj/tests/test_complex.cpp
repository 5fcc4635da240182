#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace sepcx;

namespace {

Complex from_faces(std::size_t vertices, std::vector<Face> faces)
{
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vertices; ++i)
        labels.push_back(std::to_string(i));
    return Complex(std::move(labels), std::move(faces));
}

Complex four_cycle() { return from_faces(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

std::set<Face> face_set(const Complex& x)
{
    std::set<Face> out;
    for (const auto& layer : faces_by_dim(x))
        out.insert(layer.begin(), layer.end());
    return out;
}

// Random complex: a handful of random generators over a small table.
Complex random_complex(std::mt19937& rng, std::size_t vertices, std::size_t generators, std::size_t max_size)
{
    std::vector<Face> faces;
    for (std::size_t i = 0; i < generators; ++i) {
        std::set<Vertex> f;
        const std::size_t size = 1 + rng() % max_size;
        while (f.size() < std::min(size, vertices))
            f.insert(static_cast<Vertex>(rng() % vertices));
        faces.emplace_back(f.begin(), f.end());
    }
    return from_faces(vertices, faces);
}

}  // namespace

TEST_CASE("Figure 2 strong complex has exactly the drawn edges", "[complex]")
{
    const auto x = build(4, Relation::strong);
    std::set<std::pair<std::string, std::string>> drawn{
        {"2", "3"},    {"2", "23"},   {"2", "24"},   {"2", "124"},  {"3", "23"},   {"3", "13"},
        {"3", "134"},  {"124", "24"}, {"124", "14"}, {"134", "13"}, {"134", "14"}, {"124", "134"},
        {"24", "23"},  {"23", "13"},  {"13", "14"},  {"14", "24"}};
    std::set<std::pair<std::string, std::string>> built;
    for (const auto& e : faces_of_dim(x.complex, 1)) {
        auto a = x.complex.label(e[0]), b = x.complex.label(e[1]);
        built.insert(std::minmax(a, b));
    }
    std::set<std::pair<std::string, std::string>> expected;
    for (auto [a, b] : drawn)
        expected.insert(std::minmax(a, b));
    CHECK(built == expected);
}

TEST_CASE("faces are downward closed and contains() agrees with enumeration", "[complex][property]")
{
    for (auto rel : {Relation::strong, Relation::weak}) {
        const auto x = build(5, rel);
        const auto faces = oracle::all_faces(x.complex);
        CHECK(faces == face_set(x.complex));
        for (const auto& f : faces)
            REQUIRE(x.complex.contains(f));
        std::size_t total = 0;
        for (auto c : f_vector(x.complex))
            total += c;
        CHECK(total == faces.size());
    }
}

TEST_CASE("link and star agree with the definitions", "[complex][property]")
{
    std::mt19937 rng(11);
    for (auto rel : {Relation::strong, Relation::weak})
        for (int n : {4, 5}) {
            const auto x = build(n, rel);
            const auto faces = oracle::all_faces(x.complex);
            std::vector<Face> sample(faces.begin(), faces.end());
            std::shuffle(sample.begin(), sample.end(), rng);
            if (n == 5)
                sample.resize(40);
            for (const auto& sigma : sample) {
                INFO(to_string(rel) << n << " face of size " << sigma.size());
                REQUIRE(face_set(link(x.complex, sigma)) == oracle::link_faces(faces, sigma));
                REQUIRE(face_set(star(x.complex, sigma)) == oracle::star_faces(faces, sigma));
            }
        }
}

TEST_CASE("link is star intersect deletion on every face of ss4", "[complex][property]")
{
    const auto x = build(4, Relation::strong);
    for (const auto& sigma : oracle::all_faces(x.complex))
        REQUIRE(link(x.complex, sigma) == intersection(star(x.complex, sigma), deletion(x.complex, sigma)));
}

TEST_CASE("star intersection identity in clique complexes", "[complex][property]")
{
    std::mt19937 rng(3);
    for (auto rel : {Relation::strong, Relation::weak}) {
        const auto x = build(5, rel);
        const std::vector<Face> faces = [&] {
            auto s = oracle::all_faces(x.complex);
            return std::vector<Face>(s.begin(), s.end());
        }();
        std::size_t tested = 0;
        for (int trial = 0; trial < 4000 && tested < 300; ++trial) {
            const auto& a = faces[rng() % faces.size()];
            const auto& b = faces[rng() % faces.size()];
            const Face u = face_union(a, b);
            if (!x.complex.contains(u)) {
                REQUIRE_THROWS_AS(star_intersection(x.complex, a, b), InvalidArgument);
                continue;
            }
            ++tested;
            REQUIRE(star_intersection(x.complex, a, b) == star(x.complex, u));
        }
        CHECK(tested >= 100);
    }
    // Disjoint edges of the full simplex on 4 vertices: st of the whole 4-set.
    const auto k4 = clique_complex([] {
        Graph g(4);
        for (Vertex u = 0; u < 4; ++u)
            for (Vertex v = u + 1; v < 4; ++v)
                g.add_edge(u, v);
        return g;
    }());
    CHECK(star_intersection(k4, {0, 1}, {2, 3}) == star(k4, {0, 1, 2, 3}));
    CHECK(star_intersection(k4, {0, 1}, {0, 1}) == star(k4, {0, 1}));
}

TEST_CASE("octahedron and cycle examples", "[complex]")
{
    const auto oct = cross_polytope_boundary(3);
    CHECK(f_vector(oct) == std::vector<std::size_t>{6, 12, 8});
    const auto lk = link(oct, {0});
    CHECK(isomorphic(lk, four_cycle()).has_value());
    CHECK(boundary_subcomplex(oct).empty());
    for (int d = 2; d <= 5; ++d)
        CHECK(boundary_subcomplex(cross_polytope_boundary(d)).empty());
    const auto triangle = simplex(3);
    CHECK(boundary_subcomplex(triangle) == from_faces(3, {{0, 1}, {1, 2}, {0, 2}}).relabelled(triangle.labels()));
    CHECK_THROWS_AS(boundary_subcomplex(from_faces(3, {{0, 1}, {2}})), InvalidArgument);
    CHECK(cone_faces(simplex(4)) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(cone_faces(four_cycle()).empty());
}

TEST_CASE("induced subcomplexes", "[complex]")
{
    const auto x = build(4, Relation::strong);
    const auto k = induced(x.complex, {x.vertex("2"), x.vertex("3"), x.vertex("124"), x.vertex("134")});
    CHECK(isomorphic(k, four_cycle()).has_value());
    CHECK(induced(x.complex, x.complex.vertices()) == x.complex);
    CHECK(induced(x.complex, {}).empty());
    const auto st = star(x.complex, {x.vertex("13")});
    const auto cones = cone_faces(st);
    CHECK(std::find(cones.begin(), cones.end(), x.vertex("13")) != cones.end());
}

TEST_CASE("nerve examples", "[complex]")
{
    const auto x = build(4, Relation::weak);
    CHECK(nerve(Covering{{"X"}, {x.complex}}).facets() == std::vector<Face>{{0}});
    const auto two = disjoint_union(simplex(2), simplex(3));
    const auto parts = components(two);
    REQUIRE(parts.size() == 2);
    const auto nv = nerve(Covering{{"a", "b"}, {parts[0], parts[1]}});
    CHECK(nv.facets() == std::vector<Face>{{0}, {1}});
    const auto overlapping = nerve(Covering{{"a", "b"}, {star(four_cycle(), {0}), star(four_cycle(), {1})}});
    CHECK(overlapping.facets() == std::vector<Face>{{0, 1}});
}

TEST_CASE("greedy collapse", "[complex][collapse]")
{
    CHECK(greedy_collapse(simplex(5)).collapsed());
    const auto cycle = greedy_collapse(four_cycle());
    CHECK(cycle.status == CollapseOutcome::Status::stuck);
    CHECK(cycle.remaining_facets == 4);
    CHECK(greedy_collapse(build(4, Relation::weak).complex).collapsed());
    CHECK_FALSE(greedy_collapse(build(4, Relation::strong).complex).collapsed());
}

TEST_CASE("collapse success implies trivial homology and Euler characteristic 1", "[complex][property]")
{
    std::mt19937 rng(5);
    std::size_t collapsed = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = random_complex(rng, 3 + rng() % 6, 1 + rng() % 6, 4);
        const auto c = greedy_collapse(x);
        if (!c.collapsed())
            continue;
        ++collapsed;
        REQUIRE(euler_characteristic(x) == 1);
        REQUIRE(homology_trivial(reduced_homology(x)));
    }
    CHECK(collapsed > 20);
}

TEST_CASE("isomorphism search", "[complex][isomorphism]")
{
    const auto x = build(5, Relation::strong);
    // A random relabelling of a figure-scale complex is found again.
    std::mt19937 rng(9);
    const auto lk = link(x.complex, {x.vertex("2")});
    std::vector<Vertex> perm(lk.table_size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexMap shuffle;
    for (Vertex v = 0; v < perm.size(); ++v)
        shuffle[v] = perm[v];
    std::vector<Face> gens;
    for (const auto& f : lk.facets()) {
        Face g;
        for (Vertex v : f)
            g.push_back(perm[v]);
        gens.push_back(g);
    }
    const Complex relabelled(lk.labels(), gens);
    const auto iso = isomorphic(lk, relabelled);
    REQUIRE(iso.has_value());
    CHECK(apply_vertex_map(lk, *iso, relabelled.labels()) == relabelled);
    CHECK(isomorphic(lk, lk).has_value());
    CHECK_FALSE(isomorphic(four_cycle(), from_faces(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})).has_value());
    CHECK_FALSE(isomorphic(cross_polytope_boundary(3), two_four_cycles()).has_value());
    CHECK_THROWS_AS(isomorphic(build(7, Relation::strong).complex, build(7, Relation::strong).complex),
                    InvalidArgument);
}

TEST_CASE("isomorphic complexes share f-vector and homology", "[complex][property]")
{
    std::mt19937 rng(21);
    std::size_t found = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t v = 3 + rng() % 5;
        const auto a = random_complex(rng, v, 2 + rng() % 4, 3);
        const auto b = random_complex(rng, v, 2 + rng() % 4, 3);
        if (const auto iso = isomorphic(a, b)) {
            ++found;
            REQUIRE(f_vector(a) == f_vector(b));
            REQUIRE(reduced_homology(a) == reduced_homology(b));
            REQUIRE(apply_vertex_map(a, *iso, b.labels()) == b);
        }
    }
    CHECK(found > 0);
}

TEST_CASE("f-vector, dimension, purity, Euler characteristic, components", "[complex]")
{
    const auto ss4 = build(4, Relation::strong).complex;
    CHECK(f_vector(ss4) == std::vector<std::size_t>{8, 16, 8});
    CHECK(dimension(ss4) == 2);
    CHECK(is_pure(ss4));
    CHECK(euler_characteristic(ss4) == 0);
    const auto ws4 = build(4, Relation::weak).complex;
    CHECK(f_vector(ws4) == std::vector<std::size_t>{8, 17, 10});
    CHECK(euler_characteristic(ws4) == 1);
    CHECK(Complex().dimension() == -1);
    CHECK(components(Complex()).empty());
    CHECK_THROWS_AS(faces_of_dim(ss4, -1), InvalidArgument);
    const auto b = boundary_of(5, Relation::strong);
    CHECK(components(link_in_boundary(b, {"2", "23", "234"})).size() == 2);
}

TEST_CASE("Complex construction normalizes and validates", "[complex]")
{
    const auto x = from_faces(4, {{2, 1}, {1, 2, 3}, {0}, {}});
    CHECK(x.facets() == std::vector<Face>{{0}, {1, 2, 3}});
    CHECK_THROWS_AS(from_faces(3, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(from_faces(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(star(x, {0, 1}), InvalidArgument);
}
