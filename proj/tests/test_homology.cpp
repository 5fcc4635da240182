#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace sepcx;

namespace {

std::vector<BigInt> snf_dense(const std::vector<std::vector<long long>>& rows)
{
    return smith_normal_form(SparseIntMatrix::from_dense(rows));
}

// Six-vertex real projective plane.
Complex rp2()
{
    std::vector<std::string> labels{"1", "2", "3", "4", "5", "6"};
    std::vector<Face> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                            {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};
    return Complex(labels, faces);
}

}  // namespace

TEST_CASE("Smith normal form examples", "[homology][snf]")
{
    CHECK(snf_dense({{2, 4}, {6, 8}}) == std::vector<BigInt>{2, 4});
    CHECK(snf_dense({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == std::vector<BigInt>{1, 1, 1});
    CHECK(snf_dense({{0, 0}, {0, 0}}).empty());
    CHECK(snf_dense({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
}

TEST_CASE("Smith normal form matches determinantal divisors", "[homology][snf][property]")
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
        std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
        oracle::Matrix big(rows, std::vector<BigInt>(cols));
        const int spread = trial < 200 ? 3 : 40;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const long long v = rng() % 3 == 0 ? 0 : static_cast<long long>(rng() % (2 * spread + 1)) - spread;
                m[i][j] = v;
                big[i][j] = v;
            }
        const auto expected = oracle::invariant_factors(big);
        const auto sparse = SparseIntMatrix::from_dense(m);
        REQUIRE(smith_normal_form(sparse) == expected);
        REQUIRE(detail::smith_via<BigInt>(sparse) == expected);
    }
}

TEST_CASE("Smith normal form falls back to big integers on overflow", "[homology][snf]")
{
    const long long big = 3037000499LL;  // big * big is just below 2^63
    const std::vector<std::vector<long long>> rows{{big, 0, 0}, {0, big, 0}, {big, big, big}};
    oracle::Matrix m(3, std::vector<BigInt>(3));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            m[i][j] = rows[i][j];
    CHECK(snf_dense(rows) == oracle::invariant_factors(m));
    CHECK_THROWS_AS(detail::checked_sub_mul(std::int64_t{0}, std::int64_t{1} << 62, std::int64_t{4}), detail::Overflow);
}

TEST_CASE("boundary matrices", "[homology]")
{
    const auto edge = simplex(2);
    const auto d = boundary_matrices(edge);
    REQUIRE(d.size() == 2);
    CHECK(d[1].rows() == 2);
    CHECK(d[1].cols() == 1);
    CHECK(d[1].at(0, 0) == -1);
    CHECK(d[1].at(1, 0) == 1);
    CHECK(d[0].rows() == 1);
    const auto triangle = boundary_subcomplex(simplex(3));
    CHECK(column_reduction_rank(boundary_matrices(triangle)[1], RationalField{}) == 2);
}

TEST_CASE("consecutive boundary maps compose to zero", "[homology][property]")
{
    std::vector<Complex> corpus;
    for (int n = 4; n <= 5; ++n)
        for (auto rel : {Relation::strong, Relation::weak}) {
            corpus.push_back(build(n, rel).complex);
            corpus.push_back(boundary_subcomplex(corpus.back()));
        }
    corpus.push_back(rp2());
    corpus.push_back(cross_polytope_boundary(4));
    for (const auto& x : corpus) {
        const auto d = boundary_matrices(x);
        for (std::size_t k = 1; k < d.size(); ++k)
            REQUIRE(d[k - 1].multiply(d[k]).nonzeros() == 0);
    }
}

TEST_CASE("cross-polytope boundaries have sphere homology", "[homology]")
{
    for (int d = 1; d <= 4; ++d) {
        const auto h = reduced_homology(cross_polytope_boundary(d + 1));
        CHECK(is_sphere_homology(h, static_cast<std::size_t>(d)));
    }
}

TEST_CASE("projective plane: torsion and field coefficients", "[homology]")
{
    const auto x = rp2();
    const auto h = reduced_homology(x);
    REQUIRE(h.size() == 3);
    CHECK(h[0].trivial());
    CHECK(h[1] == HomologyGroup{0, {2}});
    CHECK(h[2].trivial());
    CHECK(to_string(h[1]) == "Z/2");
    CHECK(betti_mod_p(x, 2) == std::vector<std::size_t>{0, 1, 1});
    CHECK(betti_mod_p(x, 3) == std::vector<std::size_t>{0, 0, 0});
    CHECK(betti_rational(x) == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("Betti numbers and Euler characteristic agree", "[homology][property]")
{
    std::vector<Complex> corpus{rp2(), simplex(4), cross_polytope_boundary(3), two_octahedra(), two_four_cycles()};
    for (int n = 4; n <= 5; ++n)
        for (auto rel : {Relation::strong, Relation::weak}) {
            const auto x = build(n, rel).complex;
            corpus.push_back(x);
            corpus.push_back(boundary_subcomplex(x));
        }
    for (const auto& x : corpus) {
        const auto h = reduced_homology(x);
        long long alternating = 0;
        for (std::size_t d = 0; d < h.size(); ++d)
            alternating += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(h[d].rank);
        REQUIRE(euler_characteristic(x) == alternating + 1);
        std::vector<std::size_t> ranks;
        for (const auto& g : h)
            ranks.push_back(g.rank);
        REQUIRE(betti_rational(x) == ranks);
    }
}

TEST_CASE("homology is unchanged by relabelling", "[homology][property]")
{
    std::mt19937 rng(2);
    const auto x = build(5, Relation::strong);
    const auto lk = link(x.complex, {x.vertex("24")});
    std::vector<Vertex> perm(lk.table_size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    VertexMap map;
    for (Vertex v = 0; v < perm.size(); ++v)
        map[v] = perm[v];
    const auto moved = apply_vertex_map(lk, map, lk.labels());
    CHECK(reduced_homology(moved) == reduced_homology(lk));
    const auto iso = isomorphic(lk, moved);
    REQUIRE(iso.has_value());
}

TEST_CASE("separation complexes: sphere and contractible shadows", "[homology]")
{
    CHECK(is_sphere_homology(reduced_homology(build(4, Relation::strong).complex), 1));
    CHECK(is_sphere_homology(reduced_homology(build(5, Relation::strong).complex), 2));
    CHECK(homology_trivial(reduced_homology(build(4, Relation::weak).complex)));
    CHECK(homology_trivial(reduced_homology(build(5, Relation::weak).complex)));
}

TEST_CASE("homology formatting", "[homology]")
{
    CHECK(to_string(HomologyGroup{}) == "0");
    CHECK(to_string(HomologyGroup{1, {}}) == "Z");
    CHECK(to_string(HomologyGroup{9, {}}) == "Z^9");
    CHECK(to_string(HomologyGroup{1, {2, 4}}) == "Z + Z/2 + Z/4");
    CHECK(homology_line({HomologyGroup{}, HomologyGroup{2, {}}}) == "H~0 = 0, H~1 = Z^2");
    CHECK(reduced_homology(Complex()).empty());
}
