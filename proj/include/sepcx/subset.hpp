#pragma once

// Ground-set combinatorics: subsets of [n] = {1, ..., n} as bitmasks, the strong
// and weak separation relations, frozen subsets and the Z/2 x Z/2 symmetry group
// generated by complementation and the reversal k -> n+1-k.

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepcx/errors.hpp"
#include "sepcx/graph.hpp"

namespace sepcx {

enum class Relation { weak, strong };

inline std::string to_string(Relation relation)
{
    return relation == Relation::weak ? "ws" : "ss";
}

inline Relation parse_relation(std::string_view text)
{
    if (text == "ws" || text == "weak")
        return Relation::weak;
    if (text == "ss" || text == "strong")
        return Relation::strong;
    throw InvalidArgument("unknown relation '" + std::string(text) + "' (expected ws or ss)");
}

/// Size n of the ground set [n]; 1 <= n <= 30.
class GroundSize {
public:
    static constexpr int max_value = 30;

    constexpr explicit GroundSize(int n) : n_(n)
    {
        if (n < 1 || n > max_value)
            throw InvalidArgument("ground size must lie in [1, 30], got " + std::to_string(n));
    }

    constexpr int value() const { return n_; }
    constexpr std::uint32_t full_mask() const { return (std::uint32_t{1} << n_) - 1u; }
    constexpr std::uint64_t subset_count() const { return std::uint64_t{1} << n_; }

    friend constexpr auto operator<=>(GroundSize, GroundSize) = default;

private:
    int n_;
};

/// A subset S of [n]; bit k-1 is set iff k is in S.
class SubsetMask {
public:
    SubsetMask(GroundSize n, std::uint32_t bits) : n_(n), bits_(bits)
    {
        if ((bits & ~n.full_mask()) != 0)
            throw InvalidArgument("subset mask has bits outside [n]");
    }

    static SubsetMask of(GroundSize n, std::initializer_list<int> elements)
    {
        std::uint32_t bits = 0;
        for (int k : elements) {
            if (k < 1 || k > n.value())
                throw InvalidArgument("element " + std::to_string(k) + " is not in [n]");
            bits |= std::uint32_t{1} << (k - 1);
        }
        return SubsetMask(n, bits);
    }

    static SubsetMask empty_set(GroundSize n) { return SubsetMask(n, 0); }
    static SubsetMask full_set(GroundSize n) { return SubsetMask(n, n.full_mask()); }

    /// {lo, lo+1, ..., hi}; empty when lo > hi.
    static SubsetMask interval(GroundSize n, int lo, int hi)
    {
        std::uint32_t bits = 0;
        for (int k = lo; k <= hi; ++k)
            bits |= std::uint32_t{1} << (k - 1);
        return SubsetMask(n, bits);
    }

    GroundSize ground() const { return n_; }
    std::uint32_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int k) const { return k >= 1 && k <= n_.value() && ((bits_ >> (k - 1)) & 1u); }

    /// Smallest element (1-based). Requires a nonempty set.
    int min_element() const { return std::countr_zero(bits_) + 1; }
    /// Largest element (1-based). Requires a nonempty set.
    int max_element() const { return 32 - std::countl_zero(bits_); }

    std::vector<int> elements() const
    {
        std::vector<int> out;
        for (int k = 1; k <= n_.value(); ++k)
            if (contains(k))
                out.push_back(k);
        return out;
    }

    SubsetMask minus(const SubsetMask& other) const { return SubsetMask(n_, bits_ & ~other.bits_); }
    SubsetMask complement() const { return SubsetMask(n_, n_.full_mask() & ~bits_); }
    bool disjoint_from(const SubsetMask& other) const { return (bits_ & other.bits_) == 0; }
    bool subset_of(const SubsetMask& other) const { return (bits_ & ~other.bits_) == 0; }

    friend bool operator==(const SubsetMask& a, const SubsetMask& b)
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }
    friend std::strong_ordering operator<=>(const SubsetMask& a, const SubsetMask& b)
    {
        if (auto c = a.n_.value() <=> b.n_.value(); c != 0)
            return c;
        return a.bits_ <=> b.bits_;
    }

private:
    GroundSize n_;
    std::uint32_t bits_;
};

namespace detail {

inline void require_same_ground(const SubsetMask& a, const SubsetMask& b, const char* op)
{
    if (a.ground() != b.ground())
        throw InvalidArgument(std::string(op) + ": subsets live in different ground sets");
}

inline void require_disjoint(const SubsetMask& a, const SubsetMask& b, const char* op)
{
    require_same_ground(a, b, op);
    if (!a.disjoint_from(b))
        throw InvalidArgument(std::string(op) + ": arguments must be disjoint");
}

}  // namespace detail

/// A lies entirely to the left of B: max(A) < min(B), with max(empty) = -inf
/// and min(empty) = +inf.
inline bool precedes(const SubsetMask& a, const SubsetMask& b)
{
    detail::require_disjoint(a, b, "precedes");
    if (a.empty() || b.empty())
        return true;
    return a.max_element() < b.min_element();
}

/// A splits as A1 u A2 with A1 < B < A2. Equivalently no element of A lies in
/// the closed interval [min(B), max(B)].
inline bool surrounds(const SubsetMask& a, const SubsetMask& b)
{
    detail::require_disjoint(a, b, "surrounds");
    if (a.empty() || b.empty())
        return true;
    const auto hull = SubsetMask::interval(a.ground(), b.min_element(), b.max_element());
    return a.disjoint_from(hull);
}

inline bool strongly_separated(const SubsetMask& a, const SubsetMask& b)
{
    detail::require_same_ground(a, b, "strongly_separated");
    const auto left = a.minus(b);
    const auto right = b.minus(a);
    return precedes(left, right) || precedes(right, left);
}

inline bool weakly_separated(const SubsetMask& a, const SubsetMask& b)
{
    detail::require_same_ground(a, b, "weakly_separated");
    const auto a_only = a.minus(b);
    const auto b_only = b.minus(a);
    return (a.size() <= b.size() && surrounds(a_only, b_only))
        || (b.size() <= a.size() && surrounds(b_only, a_only));
}

inline bool separated(const SubsetMask& a, const SubsetMask& b, Relation relation)
{
    return relation == Relation::strong ? strongly_separated(a, b) : weakly_separated(a, b);
}

/// Frozen test by the closed form: S is empty, [n], an initial segment {1..k}
/// or a final segment {k..n}.
inline bool is_frozen(const SubsetMask& s, Relation /*relation*/)
{
    const std::uint32_t bits = s.bits();
    const std::uint32_t full = s.ground().full_mask();
    const bool initial = (bits & (bits + 1)) == 0;
    const std::uint32_t flipped = full & ~bits;
    const bool final_segment = (flipped & (flipped + 1)) == 0;
    return initial || final_segment;
}

/// Frozen test by the definition: S is separated from every subset of [n].
/// Exhaustive, so limited to n <= 20.
inline bool is_frozen_by_definition(const SubsetMask& s, Relation relation)
{
    const GroundSize n = s.ground();
    if (n.value() > 20)
        throw CapExceeded("is_frozen_by_definition: n > 20");
    for (std::uint64_t t = 0; t < n.subset_count(); ++t)
        if (!separated(s, SubsetMask(n, static_cast<std::uint32_t>(t)), relation))
            return false;
    return true;
}

/// Elements of G = <alpha, w0>, isomorphic to Z/2 x Z/2.
enum class GroupElement : std::uint8_t { identity = 0, alpha = 1, w0 = 2, alpha_w0 = 3 };

inline constexpr std::array<GroupElement, 4> all_group_elements{
    GroupElement::identity, GroupElement::alpha, GroupElement::w0, GroupElement::alpha_w0};

inline constexpr GroupElement compose(GroupElement g, GroupElement h)
{
    return static_cast<GroupElement>(static_cast<std::uint8_t>(g) ^ static_cast<std::uint8_t>(h));
}

inline std::string to_string(GroupElement g)
{
    switch (g) {
    case GroupElement::identity: return "e";
    case GroupElement::alpha: return "alpha";
    case GroupElement::w0: return "w0";
    case GroupElement::alpha_w0: return "alpha*w0";
    }
    return "?";
}

inline SubsetMask reverse(const SubsetMask& s)
{
    const int n = s.ground().value();
    std::uint32_t out = 0;
    for (int k = 1; k <= n; ++k)
        if (s.contains(k))
            out |= std::uint32_t{1} << (n - k);
    return SubsetMask(s.ground(), out);
}

/// alpha(S) = [n] \ S, w0(S) = {n+1-k : k in S}.
inline SubsetMask act(GroupElement g, const SubsetMask& s)
{
    const auto code = static_cast<std::uint8_t>(g);
    SubsetMask out = s;
    if (code & 2u)
        out = reverse(out);
    if (code & 1u)
        out = out.complement();
    return out;
}

/// Digit string ("134") for n <= 9, comma list ("1,3,10") otherwise, "{}" for
/// the empty set.
inline std::string to_string(const SubsetMask& s)
{
    if (s.empty())
        return "{}";
    std::string out;
    const bool digits = s.ground().value() <= 9;
    for (int k : s.elements()) {
        if (!digits && !out.empty())
            out += ',';
        out += std::to_string(k);
    }
    return out;
}

inline SubsetMask parse_subset(GroundSize n, std::string_view text)
{
    if (text == "{}")
        return SubsetMask::empty_set(n);
    std::uint32_t bits = 0;
    auto add = [&](int k) {
        if (k < 1 || k > n.value())
            throw InvalidArgument("subset '" + std::string(text) + "' has an element outside [n]");
        const std::uint32_t bit = std::uint32_t{1} << (k - 1);
        if (bits & bit)
            throw InvalidArgument("subset '" + std::string(text) + "' repeats an element");
        bits |= bit;
    };
    if (text.empty())
        throw InvalidArgument("empty subset string");
    if (n.value() <= 9 && text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw InvalidArgument("bad subset string '" + std::string(text) + "'");
            add(c - '0');
        }
        return SubsetMask(n, bits);
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto stop = std::min(text.find(',', start), text.size());
        const auto token = text.substr(start, stop - start);
        if (token.empty())
            throw InvalidArgument("bad subset string '" + std::string(text) + "'");
        int k = 0;
        for (char c : token) {
            if (c < '0' || c > '9')
                throw InvalidArgument("bad subset string '" + std::string(text) + "'");
            k = k * 10 + (c - '0');
        }
        add(k);
        start = stop + 1;
    }
    return SubsetMask(n, bits);
}

/// Separation graph on the non-frozen subsets of [n], vertices in increasing
/// mask order.
struct SeparationGraph {
    GroundSize n;
    Relation relation;
    std::vector<SubsetMask> vertices;
    Graph graph;

    std::optional<Vertex> index_of(const SubsetMask& s) const
    {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), s);
        if (it == vertices.end() || *it != s)
            return std::nullopt;
        return static_cast<Vertex>(it - vertices.begin());
    }

    std::vector<std::string> labels() const
    {
        std::vector<std::string> out;
        out.reserve(vertices.size());
        for (const auto& v : vertices)
            out.push_back(to_string(v));
        return out;
    }
};

inline SeparationGraph separation_graph(GroundSize n, Relation relation)
{
    SeparationGraph out{n, relation, {}, Graph()};
    for (std::uint64_t bits = 0; bits < n.subset_count(); ++bits) {
        SubsetMask s(n, static_cast<std::uint32_t>(bits));
        if (!is_frozen(s, relation))
            out.vertices.push_back(s);
    }
    out.graph = Graph(out.vertices.size());
    for (std::size_t i = 0; i < out.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
            if (separated(out.vertices[i], out.vertices[j], relation))
                out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return out;
}

}  // namespace sepcx
