#pragma once

#include "jumploci/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace jumploci {

using IntMat = std::vector<std::vector<Int>>;

inline IntMat identity_matrix(int n) {
    IntMat u(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i) u[i][i] = 1;
    return u;
}

inline IntMat transpose(const IntMat& m, int cols) {
    IntMat t(static_cast<std::size_t>(cols), std::vector<Int>(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int j = 0; j < cols; ++j) t[j][i] = m[i][j];
    return t;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

struct HnfResult {
    IntMat h;  // same shape as the input, zero rows at the bottom
    IntMat u;  // unimodular, h = u * input
    int rank = 0;
};

/// Row Hermite normal form. Convention: row echelon with the pivot column
/// strictly increasing from row to row, pivots positive, and every entry
/// above a pivot reduced into [0, pivot). The nonzero rows are the unique
/// canonical basis of the row lattice.
inline HnfResult hermite_normal_form(IntMat m, int cols) {
    const int rows = static_cast<int>(m.size());
    HnfResult res;
    res.u = identity_matrix(rows);
    int pr = 0;  // next pivot row
    auto row_sub = [&](int target, int source, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < cols; ++c) m[target][c] -= q * m[source][c];
        for (int c = 0; c < rows; ++c) res.u[target][c] -= q * res.u[source][c];
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        m[a].swap(m[b]);
        res.u[a].swap(res.u[b]);
    };
    auto row_negate = [&](int r) {
        for (int c = 0; c < cols; ++c) m[r][c] = -m[r][c];
        for (int c = 0; c < rows; ++c) res.u[r][c] = -res.u[r][c];
    };
    using boost::multiprecision::abs;
    for (int col = 0; col < cols && pr < rows; ++col) {
        for (;;) {
            int best = -1;
            for (int r = pr; r < rows; ++r) {
                if (m[r][col] == 0) continue;
                if (best < 0 || abs(m[r][col]) < abs(m[best][col])) best = r;
            }
            if (best < 0) break;
            row_swap(pr, best);
            bool cleared = true;
            for (int r = pr + 1; r < rows; ++r) {
                if (m[r][col] == 0) continue;
                row_sub(r, pr, m[r][col] / m[pr][col]);
                if (m[r][col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m[pr][col] == 0) continue;
        if (m[pr][col] < 0) row_negate(pr);
        for (int r = 0; r < pr; ++r) row_sub(r, pr, floor_div(m[r][col], m[pr][col]));
        ++pr;
    }
    res.rank = pr;
    res.h = std::move(m);
    return res;
}

/// Invariant factors d_1 | d_2 | ... of an integer matrix, all positive,
/// optionally with the accumulated column transform V (diag = U * input * V).
struct SnfResult {
    std::vector<Int> invariants;
    IntMat col_transform;  // cols x cols, present iff requested
};

inline SnfResult smith_normal_form(IntMat m, int cols, bool want_col_transform = false) {
    using boost::multiprecision::abs;
    const int rows = static_cast<int>(m.size());
    SnfResult res;
    IntMat v;
    if (want_col_transform) v = identity_matrix(cols);
    auto col_sub = [&](int target, int source, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < rows; ++r) m[r][target] -= q * m[r][source];
        if (want_col_transform)
            for (int r = 0; r < cols; ++r) v[r][target] -= q * v[r][source];
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
        if (want_col_transform)
            for (int r = 0; r < cols; ++r) std::swap(v[r][a], v[r][b]);
    };
    auto col_negate = [&](int c) {
        for (int r = 0; r < rows; ++r) m[r][c] = -m[r][c];
        if (want_col_transform)
            for (int r = 0; r < cols; ++r) v[r][c] = -v[r][c];
    };
    auto row_sub = [&](int target, int source, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < cols; ++c) m[target][c] -= q * m[source][c];
    };
    for (int t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (m[i][j] != 0 &&
                        (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) break;
            if (pi != t) m[pi].swap(m[t]);
            col_swap(pj, t);
            bool stable = true;
            for (int i = t + 1; i < rows; ++i)
                if (m[i][t] != 0) {
                    row_sub(i, t, m[i][t] / m[t][t]);
                    if (m[i][t] != 0) stable = false;
                }
            for (int j = t + 1; j < cols; ++j)
                if (m[t][j] != 0) {
                    col_sub(j, t, m[t][j] / m[t][t]);
                    if (m[t][j] != 0) stable = false;
                }
            if (!stable) continue;
            // divisibility: pivot must divide every remaining entry
            bool fixed = false;
            for (int i = t + 1; i < rows && !fixed; ++i)
                for (int j = t + 1; j < cols && !fixed; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        row_sub(t, i, Int(-1));  // add row i to row t
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (m[t][t] == 0) break;
        if (m[t][t] < 0) col_negate(t);
        res.invariants.push_back(m[t][t]);
    }
    if (want_col_transform) res.col_transform = std::move(v);
    return res;
}

/// Subgroup of Z^s given by its canonical Hermite-form basis; rows are
/// linearly independent, possibly none (the zero subgroup).
class Sublattice {
public:
    static Sublattice from_rows(int ambient_rank, IntMat rows) {
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != ambient_rank)
                throw std::invalid_argument("Sublattice: row length != ambient rank");
        HnfResult hnf = hermite_normal_form(std::move(rows), ambient_rank);
        hnf.h.resize(static_cast<std::size_t>(hnf.rank));
        return Sublattice(ambient_rank, std::move(hnf.h));
    }

    static Sublattice zero(int ambient_rank) { return Sublattice(ambient_rank, {}); }

    static Sublattice full(int ambient_rank) {
        return Sublattice(ambient_rank, identity_matrix(ambient_rank));
    }

    int ambient_rank() const { return ambient_rank_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const IntMat& basis() const { return basis_; }

    bool is_full() const { return basis_ == identity_matrix(ambient_rank_); }
    bool is_proper() const { return !is_full(); }

    /// v lies in the lattice iff it is an integer combination of basis rows;
    /// solved by elimination against the echelon pivots.
    bool contains(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != ambient_rank_)
            throw std::invalid_argument("Sublattice::contains: rank mismatch");
        std::vector<Int> rem = v;
        for (const auto& row : basis_) {
            int p = pivot_column(row);
            if (rem[p] == 0) continue;
            if (rem[p] % row[p] != 0) return false;
            Int q = rem[p] / row[p];
            for (int c = 0; c < ambient_rank_; ++c) rem[c] -= q * row[c];
        }
        return std::all_of(rem.begin(), rem.end(), [](const Int& x) { return x == 0; });
    }

    /// All invariant factors equal to 1, i.e. Z^s / L is torsion-free.
    bool is_direct_summand() const {
        SnfResult snf = smith_normal_form(basis_, ambient_rank_);
        return std::all_of(snf.invariants.begin(), snf.invariants.end(),
                           [](const Int& d) { return d == 1; });
    }

    bool contains_lattice(const Sublattice& other) const {
        for (const auto& row : other.basis_)
            if (!contains(row)) return false;
        return true;
    }

    bool operator==(const Sublattice& o) const {
        return ambient_rank_ == o.ambient_rank_ && basis_ == o.basis_;
    }
    bool operator!=(const Sublattice& o) const { return !(*this == o); }
    bool operator<(const Sublattice& o) const { return basis_ < o.basis_; }

private:
    Sublattice(int ambient_rank, IntMat basis)
        : ambient_rank_(ambient_rank), basis_(std::move(basis)) {}

    static int pivot_column(const std::vector<Int>& row) {
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0) return static_cast<int>(c);
        throw std::logic_error("Sublattice: zero basis row");
    }

    int ambient_rank_;
    IntMat basis_;
};

/// Integer solutions of M v^T = 0 for a constraint matrix M with s columns.
/// Kernels of integer matrices are saturated, so the result is always a
/// direct summand.
inline Sublattice kernel_lattice(const IntMat& constraints, int ambient_rank) {
    IntMat nt = transpose(constraints, ambient_rank);  // s x d
    HnfResult hnf = hermite_normal_form(std::move(nt), static_cast<int>(constraints.size()));
    IntMat rows;
    for (int r = hnf.rank; r < ambient_rank; ++r) rows.push_back(std::move(hnf.u[r]));
    return Sublattice::from_rows(ambient_rank, std::move(rows));
}

inline Sublattice lattice_intersect(const Sublattice& a, const Sublattice& b) {
    if (a.ambient_rank() != b.ambient_rank())
        throw std::invalid_argument("lattice_intersect: rank mismatch");
    const int s = a.ambient_rank();
    // (x, y) with x*A = y*B <-> kernel of [A; -B]^T; intersection = {x*A}.
    IntMat stacked = a.basis();
    for (const auto& row : b.basis()) {
        std::vector<Int> neg(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) neg[c] = -row[c];
        stacked.push_back(std::move(neg));
    }
    Sublattice pairs = kernel_lattice(transpose(stacked, s), static_cast<int>(stacked.size()));
    IntMat rows;
    for (const auto& w : pairs.basis()) {
        std::vector<Int> v(static_cast<std::size_t>(s), 0);
        for (int i = 0; i < a.rank(); ++i)
            for (int c = 0; c < s; ++c) v[c] += w[i] * a.basis()[i][c];
        rows.push_back(std::move(v));
    }
    return Sublattice::from_rows(s, std::move(rows));
}

/// Group homomorphism Z^s -> Z^t as a t x s machine-integer matrix; row i is
/// the i-th component functional. Entry magnitudes are bounded by the JSON
/// layer, so exponent images stay within int64 exactly.
struct GroupHom {
    int rows = 0;  // t
    int cols = 0;  // s
    std::vector<std::vector<std::int64_t>> matrix;

    static GroupHom zero(int t, int s) {
        GroupHom p;
        p.rows = t;
        p.cols = s;
        p.matrix.assign(static_cast<std::size_t>(t),
                        std::vector<std::int64_t>(static_cast<std::size_t>(s), 0));
        return p;
    }

    static GroupHom identity(int s) {
        GroupHom p = zero(s, s);
        for (int i = 0; i < s; ++i) p.matrix[i][i] = 1;
        return p;
    }

    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& a) const {
        if (static_cast<int>(a.size()) != cols)
            throw std::invalid_argument("GroupHom::apply: rank mismatch");
        std::vector<std::int64_t> b(static_cast<std::size_t>(rows), 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) b[i] += matrix[i][j] * a[j];
        return b;
    }

    /// this o inner : Z^r -> Z^t, where inner : Z^r -> Z^s.
    GroupHom compose(const GroupHom& inner) const {
        if (cols != inner.rows) throw std::invalid_argument("GroupHom::compose: rank mismatch");
        GroupHom out = zero(rows, inner.cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < inner.cols; ++j)
                for (int k = 0; k < cols; ++k)
                    out.matrix[i][j] += matrix[i][k] * inner.matrix[k][j];
        return out;
    }

    bool is_zero() const {
        for (const auto& row : matrix)
            for (std::int64_t x : row)
                if (x != 0) return false;
        return true;
    }

    bool operator==(const GroupHom& o) const {
        return rows == o.rows && cols == o.cols && matrix == o.matrix;
    }
};

/// p lies in L^t: every row of p is an element of L.
inline bool hom_rows_in(const Sublattice& lattice, const GroupHom& p) {
    if (p.cols != lattice.ambient_rank())
        throw std::invalid_argument("hom_rows_in: rank mismatch");
    for (const auto& row : p.matrix) {
        std::vector<Int> v(row.begin(), row.end());
        if (!lattice.contains(v)) return false;
    }
    return true;
}

}  // namespace jumploci
