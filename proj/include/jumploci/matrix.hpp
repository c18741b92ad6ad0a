#pragma once

#include "jumploci/laurent.hpp"
#include "jumploci/locus.hpp"
#include "jumploci/ring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jumploci {

/// Rectangular matrix over R[Z^s]; all entries share the ring and the
/// ambient rank. Zero-row or zero-column matrices are legal.
class PolyMatrix {
public:
    PolyMatrix(Ring ring, int ambient_rank, int rows, int cols)
        : ring_(std::move(ring)), ambient_rank_(ambient_rank), rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative shape");
        entries_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                        LaurentPoly(ring_, ambient_rank_));
    }

    static PolyMatrix from_entries(const Ring& ring, int ambient_rank,
                                   const std::vector<std::vector<LaurentPoly>>& rows) {
        const int m = static_cast<int>(rows.size());
        const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
        PolyMatrix a(ring, ambient_rank, m, n);
        for (int i = 0; i < m; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw std::invalid_argument("PolyMatrix: ragged rows");
            for (int j = 0; j < n; ++j) a.set(i, j, rows[i][j]);
        }
        return a;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Ring& ring() const { return ring_; }
    int ambient_rank() const { return ambient_rank_; }

    const LaurentPoly& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    void set(int i, int j, LaurentPoly value) {
        if (value.ring() != ring_ || value.ambient_rank() != ambient_rank_)
            throw std::invalid_argument("PolyMatrix::set: entry ring or rank mismatch");
        entries_[static_cast<std::size_t>(i) * cols_ + j] = std::move(value);
    }

    /// Row-major list of all entries (the set |A|).
    const std::vector<LaurentPoly>& entry_list() const { return entries_; }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(),
                           [](const LaurentPoly& f) { return f.is_zero(); });
    }

    PolyMatrix operator*(const PolyMatrix& other) const {
        if (cols_ != other.rows_) throw std::invalid_argument("PolyMatrix: shape mismatch");
        if (ring_ != other.ring_ || ambient_rank_ != other.ambient_rank_)
            throw std::invalid_argument("PolyMatrix: ring or rank mismatch");
        PolyMatrix out(ring_, ambient_rank_, rows_, other.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < other.cols_; ++j) {
                LaurentPoly sum(ring_, ambient_rank_);
                for (int k = 0; k < cols_; ++k) sum += at(i, k) * other.at(k, j);
                out.set(i, j, std::move(sum));
            }
        return out;
    }

    bool operator==(const PolyMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ &&
               ambient_rank_ == o.ambient_rank_ && entries_ == o.entries_;
    }

private:
    Ring ring_;
    int ambient_rank_;
    int rows_;
    int cols_;
    std::vector<LaurentPoly> entries_;
};

inline PolyMatrix induced_map(const GroupHom& p, const PolyMatrix& a) {
    PolyMatrix out(a.ring(), p.rows, a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.set(i, j, induced_map(p, a.at(i, j)));
    return out;
}

/// Division-free determinant: dynamic programming over column subsets,
/// expanding along the last used row. Works over any coefficient ring.
inline LaurentPoly determinant(const PolyMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
    const int k = a.rows();
    if (k == 0) return LaurentPoly::constant(a.ring(), a.ambient_rank(), 1);
    if (k > 20) throw std::invalid_argument("determinant: size beyond the subset-DP range");
    std::vector<LaurentPoly> dp(std::size_t(1) << k, LaurentPoly(a.ring(), a.ambient_rank()));
    dp[0] = LaurentPoly::constant(a.ring(), a.ambient_rank(), 1);
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << k); ++mask) {
        const int row = std::popcount(mask) - 1;
        int pos = 0;
        for (int c = 0; c < k; ++c) {
            if (!(mask & (std::uint32_t(1) << c))) continue;
            LaurentPoly term = a.at(row, c) * dp[mask ^ (std::uint32_t(1) << c)];
            if ((row + pos) % 2 == 0)
                dp[mask] += term;
            else
                dp[mask] -= term;
            ++pos;
        }
    }
    return dp[(std::uint32_t(1) << k) - 1];
}

namespace detail {

inline bool next_combination(std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace detail

/// All k-minors, in row-set-major then column-set-major order.
inline std::vector<LaurentPoly> minors(const PolyMatrix& a, int k) {
    if (k < 1 || k > std::min(a.rows(), a.cols()))
        throw std::invalid_argument("minors: size out of range");
    std::vector<LaurentPoly> out;
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rows[i] = i;
    do {
        std::vector<int> cols(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) cols[i] = i;
        do {
            PolyMatrix sub(a.ring(), a.ambient_rank(), k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub.set(i, j, a.at(rows[i], cols[j]));
            out.push_back(determinant(sub));
        } while (detail::next_combination(cols, a.cols()));
    } while (detail::next_combination(rows, a.rows()));
    return out;
}

/// K-rank: 0 when the entries form a K-set, else the largest k whose minors
/// do not. Ascending scan; once the k-minors form a K-set so do all larger
/// sizes, so the first hit decides.
inline int k_rank(const PolyMatrix& a, const HereditarySet& hset) {
    const int bound = std::min(a.rows(), a.cols());
    for (int k = 1; k <= bound; ++k)
        if (is_k_set(a.ring(), minors(a, k), hset)) return k - 1;
    return bound;
}

/// Nonzero ring constant annihilating every listed polynomial, if one
/// exists. Found by plain enumeration over finite rings; over the integers
/// only the zero set has one.
inline std::optional<Int> constant_annihilator(const Ring& ring,
                                               const std::vector<LaurentPoly>& polys) {
    auto annihilates = [&](const Int& y) {
        for (const auto& f : polys)
            for (const auto& [exp, coeff] : f.terms())
                if (ring.mul(y, coeff) != 0) return false;
        return true;
    };
    if (ring.is_integers()) {
        if (annihilates(1)) return Int(1);
        return std::nullopt;
    }
    for (Int y = 1; y < ring.modulus(); ++y)
        if (annihilates(y)) return y;
    return std::nullopt;
}

/// Nonzero polynomial annihilator with support inside [-support_box,
/// support_box]^s, if one exists. Over a finite ring the annihilation
/// conditions are linear in the candidate's coefficients, so existence and a
/// witness come from the Smith form of the lifted system modulo n. Over the
/// integers the group ring is a domain and only the zero set qualifies. A
/// falsification aid for the constant-annihilator route, not a decision
/// procedure for unbounded supports.
inline std::optional<LaurentPoly> polynomial_annihilator(const Ring& ring, int ambient_rank,
                                                         const std::vector<LaurentPoly>& polys,
                                                         std::int64_t support_box = 2) {
    const bool all_zero = std::all_of(polys.begin(), polys.end(),
                                      [](const LaurentPoly& f) { return f.is_zero(); });
    if (all_zero) return LaurentPoly::constant(ring, ambient_rank, 1);
    if (ring.is_integers()) return std::nullopt;

    std::vector<ExponentVector> candidates;
    {
        ExponentVector cur(static_cast<std::size_t>(ambient_rank), -support_box);
        std::uint64_t count = 1;
        for (int i = 0; i < ambient_rank; ++i) {
            count *= static_cast<std::uint64_t>(2 * support_box + 1);
            if (count > 1024)
                throw std::invalid_argument("polynomial_annihilator: support box too large");
        }
        for (std::uint64_t n = 0; n < count; ++n) {
            candidates.push_back(cur);
            for (int i = ambient_rank - 1; i >= 0; --i) {
                if (cur[i] < support_box) {
                    ++cur[i];
                    std::fill(cur.begin() + i + 1, cur.end(), -support_box);
                    break;
                }
            }
        }
    }
    const int unknowns = static_cast<int>(candidates.size());

    // one congruence per polynomial per reachable output exponent
    IntMat system;
    for (const auto& f : polys) {
        if (f.is_zero()) continue;
        std::set<ExponentVector> outputs;
        for (const auto& a : candidates)
            for (const auto& [b, coeff] : f.terms()) {
                ExponentVector c(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
                outputs.insert(std::move(c));
            }
        for (const auto& c : outputs) {
            std::vector<Int> row(static_cast<std::size_t>(unknowns), 0);
            for (int u = 0; u < unknowns; ++u) {
                ExponentVector b(c.size());
                for (std::size_t i = 0; i < c.size(); ++i) b[i] = c[i] - candidates[u][i];
                row[u] = f.coefficient(b);
            }
            system.push_back(std::move(row));
        }
    }

    using boost::multiprecision::gcd;
    const Int& n = ring.modulus();
    SnfResult snf = smith_normal_form(std::move(system), unknowns, true);
    // solutions of E y = 0 (mod n) are y = V w with d_i w_i = 0 (mod n)
    std::vector<Int> w(static_cast<std::size_t>(unknowns), 0);
    bool found = false;
    for (std::size_t i = 0; i < snf.invariants.size() && !found; ++i) {
        Int g = gcd(snf.invariants[i], n);
        if (g > 1) {
            w[i] = n / g;
            found = true;
        }
    }
    if (!found && static_cast<int>(snf.invariants.size()) < unknowns) {
        w[snf.invariants.size()] = 1;
        found = true;
    }
    if (!found) return std::nullopt;

    LaurentPoly witness(ring, ambient_rank);
    for (int u = 0; u < unknowns; ++u) {
        Int coeff = 0;
        for (int i = 0; i < unknowns; ++i) coeff += snf.col_transform[u][i] * w[i];
        witness.add_term(candidates[u], coeff);
    }
    for (const auto& f : polys)
        if (!(witness * f).is_zero())
            throw std::logic_error("polynomial_annihilator: witness fails to annihilate");
    if (witness.is_zero()) throw std::logic_error("polynomial_annihilator: zero witness");
    return witness;
}

/// McCoy rank via the hereditary-set route: the K1-rank.
inline int mccoy_rank(const PolyMatrix& a) { return k_rank(a, HereditarySet::k1()); }

/// McCoy rank via direct search for constant annihilators of the minor
/// sets. Independent of the hereditary-set machinery.
inline int mccoy_rank_direct(const PolyMatrix& a) {
    const int bound = std::min(a.rows(), a.cols());
    for (int k = 1; k <= bound; ++k)
        if (constant_annihilator(a.ring(), minors(a, k)).has_value()) return k - 1;
    return bound;
}

/// Locus of those p for which the K-rank of the induced matrix drops by at
/// least `drop`: empty once the drop exceeds the rank, the full lattice for
/// a zero drop, else the module locus of the (r - drop + 1)-minors (the
/// entries when r = drop).
inline JumpLocus rank_drop_locus(const PolyMatrix& a, const HereditarySet& hset, int drop,
                                 const LocusOptions& opts = {}) {
    if (drop < 0) throw std::invalid_argument("rank_drop_locus: negative drop");
    if (drop == 0) return full_locus(a.ambient_rank());
    const int r = k_rank(a, hset);
    if (r < drop) return empty_locus(a.ambient_rank());
    const std::vector<LaurentPoly> gens =
        r == drop ? a.entry_list() : minors(a, r - drop + 1);
    return module_jump_locus(a.ring(), a.ambient_rank(), gens, hset, opts);
}

/// Locus of those p dropping the K-rank of every listed matrix strictly
/// below rank - q: empty when some rank is already <= q, else the
/// multi-module locus of the (r_i - q)-minor modules.
inline JumpLocus rank_jump_locus(const std::vector<PolyMatrix>& as, const HereditarySet& hset,
                                 int q, const LocusOptions& opts = {}) {
    if (as.empty()) throw std::invalid_argument("rank_jump_locus: need at least one matrix");
    if (q < 0) throw std::invalid_argument("rank_jump_locus: negative q");
    const int s = as.front().ambient_rank();
    const Ring& ring = as.front().ring();
    std::vector<std::vector<LaurentPoly>> modules;
    for (const auto& a : as) {
        if (a.ambient_rank() != s || a.ring() != ring)
            throw std::invalid_argument("rank_jump_locus: mixed rings or ranks");
        const int r = k_rank(a, hset);
        if (r <= q) return empty_locus(s);
        modules.push_back(minors(a, r - q));
    }
    return multi_module_jump_locus(ring, s, modules, hset, opts);
}

}  // namespace jumploci
