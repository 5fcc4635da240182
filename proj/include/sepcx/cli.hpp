#pragma once

// Command-line front end. run() never calls exit(); it returns the process
// exit code: 0 success, 1 a check FAILED, 2 usage error, 3 cap exceeded.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sepcx/boundary_study.hpp"
#include "sepcx/checks.hpp"
#include "sepcx/io.hpp"

namespace sepcx::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_cap = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Enumeration cap: --cap if given, else SEPCX_CAP, else the default.
inline int resolve_cap(std::optional<int> flag)
{
    if (flag)
        return *flag;
    if (const char* env = std::getenv("SEPCX_CAP")) {
        try {
            std::size_t used = 0;
            const int value = std::stoi(env, &used);
            if (used != std::string(env).size() || value < 1)
                throw std::invalid_argument("cap");
            return value;
        } catch (const std::exception&) {
            throw UsageError("SEPCX_CAP must be a positive integer, got '" + std::string(env) + "'");
        }
    }
    return default_enumeration_cap;
}

/// Splits a face argument into subset strings: on ';' when present (needed
/// for n > 9, where subsets are themselves comma lists), else on ','.
inline std::vector<std::string> split_face(const std::string& text)
{
    const char sep = text.find(';') != std::string::npos ? ';' : ',';
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto end = text.find(sep, start);
        auto part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (part.empty())
            throw UsageError("empty entry in face '" + text + "'");
        out.push_back(std::move(part));
        if (end == std::string::npos)
            break;
        start = end + 1;
    }
    return out;
}

inline Face resolve_face(const ComplexDocument& doc, const std::string& text)
{
    // For n > 9 a subset is itself a comma list, so without ';' the whole
    // argument names one vertex.
    const bool single = doc.n && *doc.n > 9 && text.find(';') == std::string::npos;
    const auto parts = single ? std::vector<std::string>{text} : split_face(text);
    const auto& labels = doc.complex.labels();
    Face out;
    for (const auto& p : parts) {
        const std::string key = doc.n ? to_string(parse_subset(GroundSize(*doc.n), p)) : p;
        const auto it = std::find(labels.begin(), labels.end(), key);
        if (it == labels.end())
            throw UsageError("'" + p + "' is not a vertex of the complex");
        out.push_back(static_cast<Vertex>(it - labels.begin()));
    }
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw UsageError("face '" + text + "' repeats a vertex");
    return out;
}

struct Options {
    std::string input;
    std::optional<int> n;
    std::string relation;
    std::string face;
    std::string out;
    std::string format = "text";
    std::optional<int> cap;
    bool allow_heavy = false;
    bool force = false;
    bool progress = false;
    std::string check;
    std::size_t sample = CheckOptions{}.pi_sample;
};

namespace detail {

inline ComplexDocument load_input(const Options& o, int cap)
{
    if (!o.input.empty()) {
        if (o.n || !o.relation.empty())
            throw UsageError("give either an input file or --n/--relation, not both");
        return read_complex(o.input);
    }
    if (!o.n || o.relation.empty())
        throw UsageError("an input file or both --n and --relation are required");
    const Relation rel = parse_relation(o.relation);
    auto x = build(*o.n, rel, cap);
    return ComplexDocument{*o.n, rel, std::move(x.complex)};
}

inline void write_summary(std::ostream& os, const ComplexDocument& doc)
{
    os << "f-vector:";
    for (auto v : f_vector(doc.complex))
        os << ' ' << v;
    os << "\nfacets: " << doc.complex.facet_count() << '\n';
    for (const auto& f : doc.complex.facets()) {
        os << "  {";
        for (std::size_t i = 0; i < f.size(); ++i)
            os << (i ? "," : "") << doc.complex.label(f[i]);
        os << "}\n";
    }
}

// Complex-valued verbs: file to --out (with a one-line note), else the complex
// as JSON or as a text listing on stdout.
inline void emit_complex(std::ostream& os, const Options& o, const ComplexDocument& doc)
{
    if (!o.out.empty()) {
        write_complex(o.out, doc);
        if (o.format == "json") {
            nlohmann::ordered_json j;
            j["written"] = o.out;
            j["f_vector"] = f_vector(doc.complex);
            os << j.dump() << '\n';
        } else {
            os << "wrote " << o.out << ", f-vector";
            for (auto v : f_vector(doc.complex))
                os << ' ' << v;
            os << '\n';
        }
        return;
    }
    if (o.format == "json")
        os << to_json(doc).dump(1) << '\n';
    else
        write_summary(os, doc);
}

inline int emit_report(std::ostream& os, const Options& o, const Report& r)
{
    if (o.format == "json") {
        const auto text = r.to_json().dump(1);
        if (!o.out.empty()) {
            std::ofstream file(o.out);
            if (!file)
                throw UsageError("cannot write '" + o.out + "'");
            file << text << '\n';
        }
        os << text << '\n';
    } else {
        if (!o.out.empty()) {
            std::ofstream file(o.out);
            if (!file)
                throw UsageError("cannot write '" + o.out + "'");
            r.write_text(file);
        }
        r.write_text(os);
    }
    return r.failed() ? exit_failed : exit_ok;
}

inline int require_n(const Options& o, const std::string& check)
{
    if (!o.n)
        throw UsageError("verify " + check + " needs --n");
    return *o.n;
}

inline Report run_check(const Options& o, const CheckOptions& c)
{
    const std::string& name = o.check;
    auto relations = [&]() -> std::vector<Relation> {
        if (o.relation.empty())
            return {Relation::strong, Relation::weak};
        return {parse_relation(o.relation)};
    };
    auto at_least_4 = [&](int n) {
        if (n < 4)
            throw UsageError("verify " + name + " requires --n >= 4");
        return n;
    };
    if (name == "figure-1")
        return check_figure_1();
    if (name == "figure-2")
        return check_figure_2();
    if (name == "vertex-count")
        return check_vertex_counts(require_n(o, name), c);
    if (name == "predicates") {
        const int n = require_n(o, name);
        if (n > 12)
            throw CapExceeded("verify predicates enumerates all pairs; n > 12 refused");
        return check_predicates(n);
    }
    if (name == "contractible")
        return check_contractible(at_least_4(require_n(o, name)), c);
    if (name == "sphere")
        return check_sphere(at_least_4(require_n(o, name)), c);
    if (name == "purity")
        return check_purity(require_n(o, name), c);
    if (name == "cross-polytope")
        return check_cross_polytope(at_least_4(require_n(o, name)), c);
    if (name == "lemma-4-4" || name == "pi-nonempty")
        return check_pi_nonempty(at_least_4(require_n(o, name)), c);
    if (name == "pi-chain")
        return check_pi_chain(at_least_4(require_n(o, name)), c);
    if (name == "pi-carrier")
        return check_pi_carrier(at_least_4(require_n(o, name)), c);
    if (name == "pi-on-K")
        return check_pi_on_K(at_least_4(require_n(o, name)), c);
    if (name == "equivariance") {
        const int n = at_least_4(require_n(o, name));
        Report r;
        for (Relation rel : relations())
            r.append(check_equivariance(n, rel, c));
        return r;
    }
    if (name == "ws-cover")
        return check_ws_cover(at_least_4(require_n(o, name)), c);
    if (name == "star-cover") {
        const int n = at_least_4(require_n(o, name));
        if (n > 5)
            throw CapExceeded("verify star-cover supports n <= 5");
        return check_star_covers(n, c);
    }
    if (name == "boundaries") {
        const int n = require_n(o, name);
        if (n == 5)
            return check_boundaries_5(c);
        if (n == 6)
            return check_boundaries_6(c);
        throw UsageError("verify boundaries supports --n 5 or --n 6");
    }
    throw UsageError("unknown check '" + name + "'");
}

}  // namespace detail

inline const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names{
        "figure-1", "figure-2", "vertex-count", "predicates", "contractible", "sphere", "purity",
        "cross-polytope", "lemma-4-4", "pi-nonempty", "pi-chain", "pi-carrier", "pi-on-K",
        "equivariance", "ws-cover", "star-cover", "boundaries"};
    return names;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Separation complexes: build, local operations, homology and verification"};
    app.require_subcommand(1);
    Options o;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("input", o.input, "complex JSON file");
        sub->add_option("--n", o.n, "ground set size")->check(CLI::Range(1, GroundSize::max_value));
        sub->add_option("--relation", o.relation, "ws or ss")->check(CLI::IsMember({"ws", "ss"}));
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cap", o.cap, "enumeration cap (default 7, or SEPCX_CAP)")->check(CLI::PositiveNumber);
    };

    auto* build_cmd = app.add_subcommand("build", "build a separation complex");
    build_cmd->add_option("--n", o.n, "ground set size")->required()->check(CLI::Range(1, GroundSize::max_value));
    build_cmd->add_option("--relation", o.relation, "ws or ss")->required()->check(CLI::IsMember({"ws", "ss"}));
    build_cmd->add_option("--out", o.out, "write the complex JSON here");
    add_common(build_cmd);

    auto* homology_cmd = app.add_subcommand("homology", "reduced integer homology");
    add_source(homology_cmd);
    add_common(homology_cmd);

    std::vector<CLI::App*> local_cmds;
    for (const char* verb : {"link", "star", "deletion"}) {
        auto* sub = app.add_subcommand(verb, std::string(verb) + " of a face");
        add_source(sub);
        sub->add_option("--face", o.face, "subsets separated by ',' (or ';' for n > 9), e.g. 15,234")->required();
        sub->add_option("--out", o.out, "write the complex JSON here");
        add_common(sub);
        local_cmds.push_back(sub);
    }

    auto* boundary_cmd = app.add_subcommand("boundary", "ridges in exactly one facet, and their faces");
    add_source(boundary_cmd);
    boundary_cmd->add_option("--out", o.out, "write the complex JSON here");
    boundary_cmd->add_flag("--allow-heavy", o.allow_heavy, "permit boundaries for n >= 6");
    boundary_cmd->add_flag("--force", o.force, "with --allow-heavy, also permit the weak complex");
    add_common(boundary_cmd);

    auto* fvector_cmd = app.add_subcommand("fvector", "face counts by dimension");
    add_source(fvector_cmd);
    add_common(fvector_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run one named check");
    verify_cmd->add_option("check", o.check, "check name")->required()->check(CLI::IsMember(check_names()));
    verify_cmd->add_option("--n", o.n, "ground set size")->check(CLI::Range(1, GroundSize::max_value));
    verify_cmd->add_option("--relation", o.relation, "ws or ss (equivariance)")->check(CLI::IsMember({"ws", "ss"}));
    verify_cmd->add_option("--sample", o.sample, "top faces sampled by pi' checks for n >= 6");
    verify_cmd->add_option("--out", o.out, "also write the report here");
    verify_cmd->add_flag("--allow-heavy", o.allow_heavy, "permit n = 6 boundaries");
    verify_cmd->add_flag("--force", o.force, "with --allow-heavy, also the weak n = 6 boundary");
    add_common(verify_cmd);

    auto* reproduce_cmd = app.add_subcommand("reproduce-paper", "run every check up to --n");
    reproduce_cmd->add_option("--n", o.n, "largest ground set size")->required()->check(CLI::Range(4, GroundSize::max_value));
    reproduce_cmd->add_option("--out", o.out, "also write the report here");
    reproduce_cmd->add_option("--sample", o.sample, "top faces sampled by pi' checks for n >= 6");
    reproduce_cmd->add_flag("--allow-heavy", o.allow_heavy, "permit n = 6 boundaries (strong)");
    reproduce_cmd->add_flag("--force", o.force, "with --allow-heavy, also the weak n = 6 boundary");
    reproduce_cmd->add_flag("--progress", o.progress, "print stage names to stderr");
    add_common(reproduce_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const int cap = resolve_cap(o.cap);
        CheckOptions checks{cap, o.allow_heavy, o.force, o.sample, 1};

        if (build_cmd->parsed()) {
            const Relation rel = parse_relation(o.relation);
            auto x = build(*o.n, rel, cap);
            detail::emit_complex(out, o, ComplexDocument{*o.n, rel, std::move(x.complex)});
            return exit_ok;
        }
        if (homology_cmd->parsed()) {
            const auto doc = detail::load_input(o, cap);
            const auto h = reduced_homology(doc.complex);
            if (o.format == "json") {
                nlohmann::ordered_json j;
                j["homology"] = homology_to_json(h);
                out << j.dump(1) << '\n';
            } else {
                for (std::size_t d = 0; d < h.size(); ++d)
                    out << "H~" << d << " = " << to_string(h[d]) << '\n';
                if (h.empty())
                    out << "void complex: no groups\n";
            }
            return exit_ok;
        }
        for (std::size_t i = 0; i < local_cmds.size(); ++i) {
            if (!local_cmds[i]->parsed())
                continue;
            auto doc = detail::load_input(o, cap);
            const Face sigma = resolve_face(doc, o.face);
            if (!doc.complex.contains(sigma))
                throw UsageError("'" + o.face + "' is not a face of the complex");
            if (i == 0)
                doc.complex = link(doc.complex, sigma);
            else if (i == 1)
                doc.complex = star(doc.complex, sigma);
            else
                doc.complex = deletion(doc.complex, sigma);
            detail::emit_complex(out, o, doc);
            return exit_ok;
        }
        if (boundary_cmd->parsed()) {
            if (o.n && *o.n > default_boundary_cap) {
                const bool weak = o.relation == "ws";
                if (!o.allow_heavy || (weak && !o.force))
                    throw CapExceeded(std::string("boundary for n > 5 needs --allow-heavy") + (weak ? " and --force" : ""));
                err << "computing a heavy boundary at n = " << *o.n << '\n';
            }
            auto doc = detail::load_input(o, cap);
            if (!is_pure(doc.complex))
                throw UsageError("boundary: the complex is not pure");
            doc.complex = boundary_subcomplex(doc.complex);
            detail::emit_complex(out, o, doc);
            return exit_ok;
        }
        if (fvector_cmd->parsed()) {
            const auto doc = detail::load_input(o, cap);
            const auto f = f_vector(doc.complex);
            if (o.format == "json") {
                out << nlohmann::json(f).dump() << '\n';
            } else {
                for (std::size_t i = 0; i < f.size(); ++i)
                    out << (i ? " " : "") << f[i];
                out << '\n';
            }
            return exit_ok;
        }
        if (verify_cmd->parsed()) {
            if (o.n)
                check_cap(*o.n, cap);
            return detail::emit_report(out, o, detail::run_check(o, checks));
        }
        if (reproduce_cmd->parsed()) {
            std::function<void(const std::string&)> progress;
            if (o.progress || o.allow_heavy)
                progress = [&err](const std::string& stage) { err << "running " << stage << '\n' << std::flush; };
            return detail::emit_report(out, o, reproduce_paper({*o.n, checks}, progress));
        }
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return exit_cap;
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidArgument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace sepcx::cli
