#pragma once

// Boundaries of the separation complexes and the local computations used to
// show they are not manifolds: links of faces, their homology, and comparison
// with two octahedron boundaries or two 4-cycles.

#include <string>
#include <vector>

#include "sepcx/complex.hpp"
#include "sepcx/homology.hpp"
#include "sepcx/isomorphism.hpp"
#include "sepcx/separation_complex.hpp"

namespace sepcx {

inline constexpr int default_boundary_cap = 5;

struct BoundaryComplex {
    SeparationComplex parent;
    Complex boundary;

    Face face(const std::vector<std::string>& subsets) const { return parent.face(subsets); }
};

/// Boundary of build(n, relation). Boundaries above `boundary_cap` are refused.
inline BoundaryComplex boundary_of(int n, Relation relation, int boundary_cap = default_boundary_cap,
                                   int cap = default_enumeration_cap)
{
    if (n > boundary_cap)
        throw CapExceeded("boundary at n = " + std::to_string(n) + " exceeds the boundary cap "
                          + std::to_string(boundary_cap));
    auto parent = build(n, relation, cap);
    auto bd = boundary_subcomplex(parent.complex);
    return {std::move(parent), std::move(bd)};
}

inline Complex link_in_boundary(const BoundaryComplex& b, const std::vector<std::string>& subsets)
{
    return link(b.boundary, b.face(subsets));
}

/// Two disjoint octahedron boundaries.
inline Complex two_octahedra() { return disjoint_union(cross_polytope_boundary(3), cross_polytope_boundary(3)); }

/// Two disjoint 4-cycles.
inline Complex two_four_cycles() { return disjoint_union(cross_polytope_boundary(2), cross_polytope_boundary(2)); }

/// True iff every component of x is isomorphic to `piece` and there are `count`
/// of them.
inline bool components_isomorphic_to(const Complex& x, const Complex& piece, std::size_t count)
{
    const auto parts = components(x);
    if (parts.size() != count)
        return false;
    return std::all_of(parts.begin(), parts.end(), [&](const Complex& c) { return isomorphic(c, piece).has_value(); });
}

/// Faces of dimension d whose link lacks the homology of a sphere of dimension
/// dim(x) - 1 - d, i.e. witnesses that x is not a homology manifold.
inline std::vector<Face> non_sphere_links(const Complex& x, int d)
{
    std::vector<Face> out;
    const int target = x.dimension() - 1 - d;
    for (const auto& f : faces_of_dim(x, d)) {
        const auto groups = reduced_homology(link(x, f));
        if (target < 0 || !is_sphere_homology(groups, static_cast<std::size_t>(target)))
            out.push_back(f);
    }
    return out;
}

}  // namespace sepcx
