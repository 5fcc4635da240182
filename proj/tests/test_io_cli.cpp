#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "oracles.hpp"
#include "sepcx/cli.hpp"

using namespace sepcx;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "sepcx");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / ("sepcx_test_" + name)).string();
}

}  // namespace

TEST_CASE("complex JSON round trip", "[io]")
{
    for (int n = 3; n <= 5; ++n)
        for (auto rel : {Relation::strong, Relation::weak}) {
            const auto x = build(n, rel);
            const ComplexDocument doc{n, rel, x.complex};
            const auto back = complex_from_json(nlohmann::json::parse(to_json(doc).dump()));
            REQUIRE(back.n == n);
            REQUIRE(back.relation == rel);
            REQUIRE(back.complex == x.complex);
        }
    const auto path = temp_path("roundtrip.json");
    const auto lk = link(build(5, Relation::weak).complex, {0});
    write_complex(path, ComplexDocument{5, Relation::weak, lk});
    CHECK(read_complex(path).complex == lk);
    std::filesystem::remove(path);
}

TEST_CASE("complex JSON validation", "[io]")
{
    using nlohmann::json;
    CHECK_THROWS_AS(complex_from_json(json::array()), InvalidArgument);
    CHECK_THROWS_AS(complex_from_json(json{{"vertices", json::array()}}), InvalidArgument);
    CHECK_THROWS_AS(complex_from_json(json{{"n", 4}, {"vertices", {"2", "9"}}, {"facets", json::array()}}),
                    InvalidArgument);
    CHECK_THROWS_AS(complex_from_json(json{{"vertices", {"a", "a"}}, {"facets", json::array()}}), InvalidArgument);
    CHECK_THROWS_AS(complex_from_json(json{{"vertices", {"a"}}, {"facets", {{0, 1}}}}), InvalidArgument);
    CHECK_THROWS_AS(complex_from_json(json{{"vertices", {"a"}}, {"facets", {{-1}}}}), InvalidArgument);
    CHECK_THROWS_AS(complex_from_json(json{{"relation", "xx"}, {"vertices", {"a"}}, {"facets", {{0}}}}),
                    InvalidArgument);
    const auto plain = complex_from_json(json{{"n", nullptr}, {"relation", nullptr}, {"vertices", {"a", "b"}},
                                              {"facets", {{0, 1}, {1}}}});
    CHECK_FALSE(plain.n.has_value());
    CHECK(plain.complex.facets() == std::vector<Face>{{0, 1}});
    const auto h = homology_to_json({HomologyGroup{2, {2}}});
    CHECK(h.dump() == R"([{"dim":0,"rank":2,"torsion":["2"]}])");
}

TEST_CASE("cli build then fvector", "[cli]")
{
    const auto path = temp_path("ss4.json");
    const auto built = run_cli({"build", "--n", "4", "--relation", "ss", "--out", path});
    REQUIRE(built.code == 0);
    const auto f = run_cli({"fvector", path});
    CHECK(f.code == 0);
    CHECK(f.out == "8 16 8\n");
    const auto h = run_cli({"homology", path});
    CHECK(h.out == "H~0 = 0\nH~1 = Z\nH~2 = 0\n");
    const auto lk = run_cli({"link", path, "--face", "13", "--format", "json"});
    REQUIRE(lk.code == 0);
    const auto doc = complex_from_json(nlohmann::json::parse(lk.out));
    // Figure 2: 13 meets 3, 14, 23, 134; among those only 3-23, 3-134, 14-134 are edges.
    CHECK(f_vector(doc.complex) == std::vector<std::size_t>{4, 3});
    std::filesystem::remove(path);
}

TEST_CASE("cli local operations and boundary", "[cli]")
{
    const auto lk = run_cli({"link", "--n", "5", "--relation", "ws", "--face", "15,234"});
    CHECK(lk.code == 0);
    CHECK(lk.out.rfind("f-vector:", 0) == 0);
    CHECK(run_cli({"star", "--n", "4", "--relation", "ss", "--face", "2,3"}).code == 0);
    CHECK(run_cli({"deletion", "--n", "4", "--relation", "ss", "--face", "2"}).code == 0);
    const auto bd = run_cli({"boundary", "--n", "5", "--relation", "ss", "--format", "json"});
    REQUIRE(bd.code == 0);
    const auto doc = complex_from_json(nlohmann::json::parse(bd.out));
    CHECK(f_vector(doc.complex) == std::vector<std::size_t>{22, 140, 370, 430, 172});
    CHECK(run_cli({"boundary", "--n", "6", "--relation", "ss"}).code == cli::exit_cap);
    CHECK(run_cli({"boundary", "--n", "6", "--relation", "ws", "--allow-heavy"}).code == cli::exit_cap);
}

TEST_CASE("cli verify and exit codes", "[cli]")
{
    const auto ok = run_cli({"verify", "lemma-4-4", "--n", "5"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("0 violations : PASS") != std::string::npos);
    CHECK(run_cli({"verify", "pi-nonempty", "--n", "4"}).code == 0);
    CHECK(run_cli({"verify", "equivariance", "--n", "4", "--relation", "ss"}).code == 0);
    CHECK(run_cli({"verify", "no-such-check", "--n", "4"}).code == cli::exit_usage);
    CHECK(run_cli({"verify", "lemma-4-4"}).code == cli::exit_usage);
    CHECK(run_cli({"verify", "lemma-4-4", "--n", "3"}).code == cli::exit_usage);
    CHECK(run_cli({"build", "--n", "4"}).code == cli::exit_usage);
    CHECK(run_cli({"build", "--n", "4", "--relation", "xs"}).code == cli::exit_usage);
    CHECK(run_cli({"fvector"}).code == cli::exit_usage);
    CHECK(run_cli({"fvector", "/nonexistent/file.json"}).code == cli::exit_usage);
    CHECK(run_cli({"link", "--n", "4", "--relation", "ss", "--face", "2,134"}).code == cli::exit_usage);
    CHECK(run_cli({"build", "--n", "8", "--relation", "ss"}).code == cli::exit_cap);
    CHECK(run_cli({"build", "--n", "5", "--relation", "ss", "--cap", "4"}).code == cli::exit_cap);
    CHECK(run_cli({}).code == cli::exit_usage);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("cli honours SEPCX_CAP", "[cli]")
{
    ::setenv("SEPCX_CAP", "4", 1);
    CHECK(run_cli({"fvector", "--n", "5", "--relation", "ss"}).code == cli::exit_cap);
    CHECK(run_cli({"fvector", "--n", "5", "--relation", "ss", "--cap", "5"}).code == 0);
    ::setenv("SEPCX_CAP", "many", 1);
    CHECK(run_cli({"fvector", "--n", "4", "--relation", "ss"}).code == cli::exit_usage);
    ::unsetenv("SEPCX_CAP");
    CHECK(run_cli({"fvector", "--n", "4", "--relation", "ss"}).code == 0);
}

TEST_CASE("faces for n > 9 use ';' between subsets", "[cli]")
{
    const std::vector<std::string> labels{"1,10", "2", "3,4"};
    const ComplexDocument doc{10, std::nullopt, Complex(labels, {{0, 1, 2}})};
    CHECK(cli::resolve_face(doc, "1,10;2") == Face{0, 1});
    CHECK(cli::resolve_face(doc, "3,4") == Face{2});
    CHECK_THROWS_AS(cli::resolve_face(doc, "2,3"), cli::UsageError);
}

TEST_CASE("reproduce-paper is deterministic", "[cli]")
{
    const auto a = run_cli({"reproduce-paper", "--n", "4", "--format", "json"});
    const auto b = run_cli({"reproduce-paper", "--n", "4", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j.at("failed") == 0);
    for (const auto& row : j.at("checks"))
        for (const char* key : {"check", "scope", "expected", "computed", "status", "witness"})
            REQUIRE(row.contains(key));
}
