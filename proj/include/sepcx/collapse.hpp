#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sepcx/complex.hpp"

namespace sepcx {

struct CollapseOutcome {
    enum class Status { collapsed_to_point, stuck };

    Status status = Status::stuck;
    std::size_t remaining_facets = 0;
    std::size_t steps = 0;
    Complex remaining;

    bool collapsed() const { return status == Status::collapsed_to_point; }
};

inline std::string to_string(CollapseOutcome::Status status)
{
    return status == CollapseOutcome::Status::collapsed_to_point ? "collapsed-to-point" : "stuck";
}

namespace detail {

// Least free face of the complex: smallest size first, then lexicographic. A
// free face is a proper face of exactly one facet. Returns the face and the
// position of its facet.
inline std::optional<std::pair<Face, std::size_t>> least_free_face(const Complex& x)
{
    std::size_t max_size = 0;
    for (const auto& f : x.facets())
        max_size = std::max(max_size, f.size());
    for (std::size_t k = 1; k < max_size; ++k) {
        std::optional<std::pair<Face, std::size_t>> best;
        for (std::size_t pos = 0; pos < x.facet_count(); ++pos) {
            const Face& facet = x.facets()[pos];
            if (facet.size() <= k)
                continue;
            std::vector<std::size_t> pick(k);
            std::iota(pick.begin(), pick.end(), 0);
            Face tau(k);
            while (true) {
                for (std::size_t i = 0; i < k; ++i)
                    tau[i] = facet[pick[i]];
                if ((!best || tau < best->first) && x.facets_containing(tau) == 1)
                    best = std::make_pair(tau, pos);
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
        if (best)
            return best;
    }
    return std::nullopt;
}

}  // namespace detail

/// Greedy collapse: repeatedly removes the least free face together with every
/// face between it and its unique facet. Success certifies contractibility;
/// getting stuck proves nothing.
inline CollapseOutcome greedy_collapse(const Complex& x)
{
    CollapseOutcome out;
    Complex current = x;
    while (true) {
        if (current.facet_count() == 1 && current.facets().front().size() == 1) {
            out.status = CollapseOutcome::Status::collapsed_to_point;
            break;
        }
        auto free_face = detail::least_free_face(current);
        if (!free_face)
            break;
        const auto& [tau, pos] = *free_face;
        std::vector<Face> generators;
        for (std::size_t i = 0; i < current.facet_count(); ++i)
            if (i != pos)
                generators.push_back(current.facets()[i]);
        // What is left of the facet: its faces missing some vertex of tau.
        for (Vertex v : tau) {
            Face rest = current.facets()[pos];
            rest.erase(std::find(rest.begin(), rest.end(), v));
            generators.push_back(std::move(rest));
        }
        current = Complex(current.labels(), std::move(generators));
        ++out.steps;
    }
    out.remaining_facets = current.facet_count();
    out.remaining = std::move(current);
    return out;
}

}  // namespace sepcx
