#pragma once

// Exact reduced simplicial homology over Z. Boundary matrices are reduced to
// Smith normal form by sparse elimination on unit pivots followed by a dense
// arbitrary-precision reduction of whatever residual block has no unit entry.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sepcx/complex.hpp"

namespace sepcx {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct MatrixEntry {
    std::size_t row;
    std::size_t col;
    BigInt value;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

/// Sparse integer matrix, column-major, no stored zeros, at most one entry per
/// position.
class SparseIntMatrix {
public:
    using Column = std::vector<std::pair<std::size_t, BigInt>>;

    SparseIntMatrix() = default;
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

    /// Sums duplicate positions and drops zeros.
    static SparseIntMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<MatrixEntry> entries)
    {
        SparseIntMatrix m(rows, cols);
        std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
            return std::tie(a.col, a.row) < std::tie(b.col, b.row);
        });
        for (auto& e : entries) {
            if (e.row >= rows || e.col >= cols)
                throw InvalidArgument("SparseIntMatrix: entry outside the matrix");
            auto& column = m.columns_[e.col];
            if (!column.empty() && column.back().first == e.row)
                column.back().second += e.value;
            else
                column.emplace_back(e.row, std::move(e.value));
        }
        for (auto& column : m.columns_)
            std::erase_if(column, [](const auto& p) { return p.second == 0; });
        return m;
    }

    static SparseIntMatrix from_dense(const std::vector<std::vector<long long>>& rows)
    {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.front().size();
        std::vector<MatrixEntry> entries;
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw InvalidArgument("SparseIntMatrix::from_dense: ragged rows");
            for (std::size_t j = 0; j < c; ++j)
                if (rows[i][j] != 0)
                    entries.push_back({i, j, BigInt(rows[i][j])});
        }
        return from_entries(r, c, std::move(entries));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    const Column& column(std::size_t j) const { return columns_.at(j); }
    Column& column(std::size_t j) { return columns_.at(j); }

    std::size_t nonzeros() const
    {
        std::size_t count = 0;
        for (const auto& c : columns_)
            count += c.size();
        return count;
    }

    BigInt at(std::size_t i, std::size_t j) const
    {
        for (const auto& [row, value] : columns_.at(j))
            if (row == i)
                return value;
        return 0;
    }

    std::vector<MatrixEntry> entries() const
    {
        std::vector<MatrixEntry> out;
        for (std::size_t j = 0; j < columns_.size(); ++j)
            for (const auto& [row, value] : columns_[j])
                out.push_back({row, j, value});
        return out;
    }

    /// Product this * other, for chain-complex checks.
    SparseIntMatrix multiply(const SparseIntMatrix& other) const
    {
        if (cols() != other.rows())
            throw InvalidArgument("SparseIntMatrix::multiply: shape mismatch");
        std::vector<MatrixEntry> entries;
        for (std::size_t j = 0; j < other.cols(); ++j)
            for (const auto& [k, b] : other.columns_[j])
                for (const auto& [i, a] : columns_[k])
                    entries.push_back({i, j, a * b});
        return from_entries(rows(), other.cols(), std::move(entries));
    }

private:
    std::size_t rows_ = 0;
    std::vector<Column> columns_;
};

namespace detail {

struct Overflow : std::overflow_error {
    Overflow() : std::overflow_error("int64 overflow in elimination") {}
};

inline std::int64_t checked_sub_mul(std::int64_t a, std::int64_t f, std::int64_t b)
{
    std::int64_t prod = 0;
    std::int64_t out = 0;
    if (__builtin_mul_overflow(f, b, &prod) || __builtin_sub_overflow(a, prod, &out))
        throw Overflow();
    return out;
}

inline BigInt checked_sub_mul(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

inline BigInt to_big(std::int64_t v) { return BigInt(v); }
inline BigInt to_big(const BigInt& v) { return v; }

template <class T>
T from_big(const BigInt& v)
{
    if constexpr (std::is_same_v<T, BigInt>) {
        return v;
    } else {
        if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
            throw Overflow();
        return static_cast<std::int64_t>(v);
    }
}

/// Smith normal form of a dense matrix by repeated minimal-pivot reduction.
/// Returns the nonzero invariant factors, each dividing the next.
inline std::vector<BigInt> dense_smith(std::vector<std::vector<BigInt>> a)
{
    std::vector<BigInt> factors;
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a.front().size();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            // Smallest nonzero |entry| in the trailing block goes to (t, t).
            std::size_t pr = rows, pc = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == rows)
                return factors;
            std::swap(a[t], a[pr]);
            for (auto& row : a)
                std::swap(row[t], row[pc]);

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                const BigInt q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                const BigInt q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (!clean)
                continue;
            // Divisibility: fold any offending row into row t and retry.
            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows)
                break;
            for (std::size_t j = t; j < cols; ++j)
                a[t][j] += a[bad][j];
        }
        factors.push_back(abs(a[t][t]));
    }
    return factors;
}

/// Sparse elimination over unit pivots. Columns are visited by increasing
/// nonzero count; within a column the unit entry in the shortest row wins.
template <class T>
class UnitPivotEliminator {
public:
    explicit UnitPivotEliminator(const SparseIntMatrix& m)
        : rows_(m.rows()), col_rows_(m.cols()), col_count_(m.cols(), 0),
          row_active_(m.rows(), true), col_active_(m.cols(), true), stamp_(m.rows(), 0)
    {
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [i, value] : m.column(j)) {
                rows_[i].emplace_back(static_cast<std::uint32_t>(j), from_big<T>(value));
                col_rows_[j].push_back(static_cast<std::uint32_t>(i));
                ++col_count_[j];
            }
        // Column-major fill keeps each row sorted by column already.
    }

    /// Runs elimination; returns the number of unit pivots taken and leaves
    /// the residual block for residual().
    std::size_t run()
    {
        std::size_t pivots = 0;
        while (true) {
            std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
            for (std::uint32_t j = 0; j < col_count_.size(); ++j)
                if (col_active_[j] && col_count_[j] > 0)
                    queue.emplace(col_count_[j], j);
            queue_ = &queue;
            std::size_t taken_this_sweep = 0;
            while (!queue.empty()) {
                auto [count, c] = queue.top();
                queue.pop();
                if (!col_active_[c] || count != col_count_[c] || count == 0)
                    continue;
                const auto r = find_unit_row(c);
                if (r == npos)
                    continue;
                pivot(r, c);
                ++pivots;
                ++taken_this_sweep;
            }
            queue_ = nullptr;
            // Entries can turn into units without their column count changing;
            // sweep again until no unit pivot remains anywhere.
            if (taken_this_sweep == 0)
                break;
        }
        return pivots;
    }

    /// Remaining active block as a dense matrix over BigInt (rows and columns
    /// with no entries are dropped).
    std::vector<std::vector<BigInt>> residual() const
    {
        std::vector<std::uint32_t> live_cols;
        std::vector<std::size_t> col_pos(col_count_.size(), npos);
        for (std::uint32_t j = 0; j < col_count_.size(); ++j)
            if (col_active_[j] && col_count_[j] > 0) {
                col_pos[j] = live_cols.size();
                live_cols.push_back(j);
            }
        std::vector<std::vector<BigInt>> out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (!row_active_[i] || rows_[i].empty())
                continue;
            std::vector<BigInt> dense(live_cols.size());
            bool any = false;
            for (const auto& [j, v] : rows_[i])
                if (col_pos[j] != npos) {
                    dense[col_pos[j]] = to_big(v);
                    any = true;
                }
            if (any)
                out.push_back(std::move(dense));
        }
        return out;
    }

private:
    using Key = std::pair<std::uint32_t, std::uint32_t>;
    using Row = std::vector<std::pair<std::uint32_t, T>>;
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    const T* find_in_row(std::size_t r, std::uint32_t c) const
    {
        const auto& row = rows_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, std::uint32_t col) { return e.first < col; });
        if (it == row.end() || it->first != c)
            return nullptr;
        return &it->second;
    }

    // Compacts the row list of column c to live, distinct rows that hold an
    // entry in c, then picks the shortest row with a unit entry.
    std::size_t find_unit_row(std::uint32_t c)
    {
        ++epoch_;
        auto& list = col_rows_[c];
        std::size_t keep = 0;
        std::size_t best = npos;
        for (auto r : list) {
            if (!row_active_[r] || stamp_[r] == epoch_ || find_in_row(r, c) == nullptr)
                continue;
            stamp_[r] = epoch_;
            list[keep++] = r;
            if (is_unit(*find_in_row(r, c)) && (best == npos || rows_[r].size() < rows_[best].size()))
                best = r;
        }
        list.resize(keep);
        return best;
    }

    void touch(std::uint32_t j)
    {
        if (queue_ != nullptr && col_active_[j])
            queue_->emplace(col_count_[j], j);
    }

    void pivot(std::size_t r, std::uint32_t c)
    {
        const T p = *find_in_row(r, c);  // +1 or -1, its own inverse
        const Row& pivot_row = rows_[r];
        std::vector<std::uint32_t> others;
        for (auto r2 : col_rows_[c])
            if (r2 != r)
                others.push_back(r2);

        Row merged;
        for (auto r2 : others) {
            const T factor = checked_sub_mul(T(0), T(-1) * *find_in_row(r2, c), p);  // a * p
            Row& target = rows_[r2];
            merged.clear();
            merged.reserve(target.size() + pivot_row.size());
            auto a = target.begin();
            auto b = pivot_row.begin();
            while (a != target.end() || b != pivot_row.end()) {
                if (b == pivot_row.end() || (a != target.end() && a->first < b->first)) {
                    merged.push_back(std::move(*a));
                    ++a;
                } else if (a == target.end() || b->first < a->first) {
                    // Fill-in: new entry -factor * pivot value.
                    T v = checked_sub_mul(T(0), factor, b->second);
                    merged.emplace_back(b->first, std::move(v));
                    col_rows_[b->first].push_back(static_cast<std::uint32_t>(r2));
                    ++col_count_[b->first];
                    touch(b->first);
                    ++b;
                } else {
                    T v = checked_sub_mul(a->second, factor, b->second);
                    if (v == 0) {
                        --col_count_[a->first];
                        touch(a->first);
                    } else {
                        merged.emplace_back(a->first, std::move(v));
                    }
                    ++a;
                    ++b;
                }
            }
            target.swap(merged);
        }
        // Retire the pivot row and column.
        for (const auto& [j, v] : pivot_row) {
            if (j == c)
                continue;
            --col_count_[j];
            touch(j);
        }
        row_active_[r] = false;
        rows_[r].clear();
        rows_[r].shrink_to_fit();
        col_active_[c] = false;
        col_count_[c] = 0;
        col_rows_[c].clear();
        col_rows_[c].shrink_to_fit();
    }

    std::vector<Row> rows_;
    std::vector<std::vector<std::uint32_t>> col_rows_;
    std::vector<std::uint32_t> col_count_;
    std::vector<bool> row_active_;
    std::vector<bool> col_active_;
    std::vector<std::uint64_t> stamp_;
    std::uint64_t epoch_ = 0;
    std::priority_queue<Key, std::vector<Key>, std::greater<>>* queue_ = nullptr;
};

template <class T>
std::vector<BigInt> smith_via(const SparseIntMatrix& m)
{
    UnitPivotEliminator<T> elim(m);
    const std::size_t units = elim.run();
    std::vector<BigInt> factors(units, BigInt(1));
    auto rest = dense_smith(elim.residual());
    factors.insert(factors.end(), rest.begin(), rest.end());
    return factors;
}

}  // namespace detail

/// Invariant factors d1 | d2 | ... | dr of M, r = rank M.
inline std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m)
{
    try {
        return detail::smith_via<std::int64_t>(m);
    } catch (const detail::Overflow&) {
        return detail::smith_via<BigInt>(m);
    }
}

/// Matrix rank over a field, by left-to-right column reduction on the lowest
/// nonzero row. `Field` supplies value_type, from(BigInt), is_zero, sub_mul
/// (a - f*b) and div.
template <class Field>
std::size_t column_reduction_rank(const SparseIntMatrix& m, const Field& field)
{
    using V = typename Field::value_type;
    using Column = std::vector<std::pair<std::size_t, V>>;
    std::vector<Column> reduced(m.cols());
    std::vector<std::size_t> pivot_col(m.rows(), std::numeric_limits<std::size_t>::max());
    std::size_t rank = 0;
    Column work, next;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        work.clear();
        for (const auto& [i, v] : m.column(j)) {
            V fv = field.from(v);
            if (!field.is_zero(fv))
                work.emplace_back(i, std::move(fv));
        }
        while (!work.empty()) {
            const std::size_t low = work.back().first;
            const std::size_t other = pivot_col[low];
            if (other == std::numeric_limits<std::size_t>::max())
                break;
            const Column& src = reduced[other];
            const V factor = field.div(work.back().second, src.back().second);
            next.clear();
            auto a = work.begin();
            auto b = src.begin();
            while (a != work.end() || b != src.end()) {
                if (b == src.end() || (a != work.end() && a->first < b->first)) {
                    next.push_back(*a++);
                } else if (a == work.end() || b->first < a->first) {
                    next.emplace_back(b->first, field.sub_mul(V(0), factor, b->second));
                    ++b;
                } else {
                    V v = field.sub_mul(a->second, factor, b->second);
                    if (!field.is_zero(v))
                        next.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            work.swap(next);
        }
        if (!work.empty()) {
            pivot_col[work.back().first] = j;
            reduced[j] = work;
            ++rank;
        }
    }
    return rank;
}

/// Z/p for a prime p < 2^32.
struct PrimeField {
    using value_type = std::uint64_t;
    std::uint64_t p;

    value_type from(const BigInt& v) const
    {
        BigInt r = v % p;
        if (r < 0)
            r += p;
        return static_cast<std::uint64_t>(r);
    }
    bool is_zero(value_type v) const { return v == 0; }
    value_type sub_mul(value_type a, value_type f, value_type b) const { return (a + p - (f * b) % p) % p; }
    value_type div(value_type a, value_type b) const { return (a * inverse(b)) % p; }
    value_type inverse(value_type b) const
    {
        // Fermat: b^(p-2).
        value_type result = 1, base = b % p;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1u)
                result = (result * base) % p;
            base = (base * base) % p;
        }
        return result;
    }
};

struct RationalField {
    using value_type = BigRational;
    value_type from(const BigInt& v) const { return BigRational(v); }
    bool is_zero(const value_type& v) const { return v == 0; }
    value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) const { return a - f * b; }
    value_type div(const value_type& a, const value_type& b) const { return a / b; }
};

/// Reduced homology group: Z^rank plus torsion summands Z/t.
struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<BigInt> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// "0", "Z", "Z^9", "Z + Z/2", "Z/2".
inline std::string to_string(const HomologyGroup& h)
{
    std::string out;
    if (h.rank == 1)
        out = "Z";
    else if (h.rank > 1)
        out = "Z^" + std::to_string(h.rank);
    for (const auto& t : h.torsion) {
        if (!out.empty())
            out += " + ";
        out += "Z/" + t.str();
    }
    return out.empty() ? "0" : out;
}

/// Augmented boundary matrices d_0 .. d_dim. d_0 maps every vertex to the empty
/// face (a 1 x f_0 row of ones); d_d has rows indexed by (d-1)-faces and columns
/// by d-faces, both in lexicographic order, with entry (-1)^i for omitting the
/// i-th vertex.
inline std::vector<SparseIntMatrix> boundary_matrices(const std::vector<std::vector<Face>>& faces)
{
    std::vector<SparseIntMatrix> out;
    for (std::size_t d = 0; d < faces.size(); ++d) {
        const auto& cols = faces[d];
        if (d == 0) {
            SparseIntMatrix m(1, cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j)
                m.column(j).emplace_back(0, BigInt(1));
            out.push_back(std::move(m));
            continue;
        }
        const auto& rows = faces[d - 1];
        SparseIntMatrix m(rows.size(), cols.size());
        Face sub;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Face& f = cols[j];
            auto& column = m.column(j);
            for (std::size_t i = 0; i < f.size(); ++i) {
                sub.assign(f.begin(), f.end());
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
                auto it = std::lower_bound(rows.begin(), rows.end(), sub);
                column.emplace_back(static_cast<std::size_t>(it - rows.begin()), BigInt(i % 2 == 0 ? 1 : -1));
            }
            std::sort(column.begin(), column.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::vector<SparseIntMatrix> boundary_matrices(const Complex& x)
{
    return boundary_matrices(faces_by_dim(x));
}

/// Reduced integral homology in dimensions 0..dim(X). The void complex yields
/// an empty list.
inline std::vector<HomologyGroup> reduced_homology(const Complex& x)
{
    const auto faces = faces_by_dim(x);
    const auto matrices = boundary_matrices(faces);
    std::vector<std::vector<BigInt>> factors;
    for (const auto& m : matrices)
        factors.push_back(smith_normal_form(m));
    std::vector<HomologyGroup> out(faces.size());
    for (std::size_t d = 0; d < faces.size(); ++d) {
        const std::size_t rank_here = factors[d].size();
        const std::size_t rank_above = d + 1 < factors.size() ? factors[d + 1].size() : 0;
        out[d].rank = faces[d].size() - rank_here - rank_above;
        if (d + 1 < factors.size())
            for (const auto& t : factors[d + 1])
                if (t > 1)
                    out[d].torsion.push_back(t);
    }
    return out;
}

namespace detail {

template <class Field>
std::vector<std::size_t> betti_over(const Complex& x, const Field& field)
{
    const auto faces = faces_by_dim(x);
    const auto matrices = boundary_matrices(faces);
    std::vector<std::size_t> ranks;
    for (const auto& m : matrices)
        ranks.push_back(column_reduction_rank(m, field));
    std::vector<std::size_t> out(faces.size());
    for (std::size_t d = 0; d < faces.size(); ++d)
        out[d] = faces[d].size() - ranks[d] - (d + 1 < ranks.size() ? ranks[d + 1] : 0);
    return out;
}

}  // namespace detail

/// Reduced Betti numbers over Q, by exact rational column reduction.
inline std::vector<std::size_t> betti_rational(const Complex& x)
{
    return detail::betti_over(x, RationalField{});
}

/// Reduced Betti numbers over Z/p.
inline std::vector<std::size_t> betti_mod_p(const Complex& x, std::uint32_t p)
{
    if (p < 2)
        throw InvalidArgument("betti_mod_p: p must be a prime >= 2");
    return detail::betti_over(x, PrimeField{p});
}

inline bool homology_trivial(const std::vector<HomologyGroup>& groups)
{
    return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& h) { return h.trivial(); });
}

/// True iff the groups are those of a d-sphere: Z in degree d, zero elsewhere.
inline bool is_sphere_homology(const std::vector<HomologyGroup>& groups, std::size_t d)
{
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const HomologyGroup expected{i == d ? std::size_t{1} : std::size_t{0}, {}};
        if (!(groups[i] == expected))
            return false;
    }
    return d < groups.size();
}

inline std::string homology_line(const std::vector<HomologyGroup>& groups)
{
    std::string out;
    for (std::size_t d = 0; d < groups.size(); ++d) {
        if (d > 0)
            out += ", ";
        out += "H~" + std::to_string(d) + " = " + to_string(groups[d]);
    }
    return out;
}

}  // namespace sepcx
