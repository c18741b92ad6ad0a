#pragma once

#include "jumploci/locus.hpp"
#include "jumploci/matrix.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace jumploci {

/// Chain complex of based free R[Z^s]-modules. Module elements are column
/// vectors, so the differential d_k : C_k -> C_{k-1} is a matrix D_k of
/// shape r_{k-1} x r_k. Ranks outside the stored window are zero and the
/// corresponding differentials are zero-shaped.
class ChainComplex {
public:
    ChainComplex(Ring ring, int ambient_rank, int lowest_index, std::vector<int> ranks,
                 std::vector<PolyMatrix> differentials)
        : ring_(std::move(ring)),
          ambient_rank_(ambient_rank),
          lowest_index_(lowest_index),
          ranks_(std::move(ranks)),
          diffs_(std::move(differentials)) {
        for (int r : ranks_)
            if (r < 0) throw std::invalid_argument("ChainComplex: negative rank");
        const std::size_t expected = ranks_.empty() ? 0 : ranks_.size() - 1;
        if (diffs_.size() != expected)
            throw std::invalid_argument("ChainComplex: need one differential per adjacent pair");
        for (std::size_t i = 0; i < diffs_.size(); ++i) {
            const PolyMatrix& d = diffs_[i];  // D_{lowest + 1 + i}
            if (d.ring() != ring_ || d.ambient_rank() != ambient_rank_)
                throw std::invalid_argument("ChainComplex: differential ring or rank mismatch");
            if (d.rows() != ranks_[i] || d.cols() != ranks_[i + 1])
                throw std::invalid_argument("ChainComplex: differential shape mismatch");
        }
    }

    const Ring& ring() const { return ring_; }
    int ambient_rank() const { return ambient_rank_; }
    int lowest_index() const { return lowest_index_; }
    int highest_index() const { return lowest_index_ + static_cast<int>(ranks_.size()) - 1; }
    const std::vector<int>& ranks() const { return ranks_; }
    const std::vector<PolyMatrix>& differentials() const { return diffs_; }

    int rank(int k) const {
        if (k < lowest_index_ || k > highest_index()) return 0;
        return ranks_[static_cast<std::size_t>(k - lowest_index_)];
    }

    /// D_k, zero-shaped outside the stored window.
    PolyMatrix differential(int k) const {
        if (k > lowest_index_ && k <= highest_index())
            return diffs_[static_cast<std::size_t>(k - lowest_index_ - 1)];
        return PolyMatrix(ring_, ambient_rank_, rank(k - 1), rank(k));
    }

private:
    Ring ring_;
    int ambient_rank_;
    int lowest_index_;
    std::vector<int> ranks_;
    std::vector<PolyMatrix> diffs_;
};

/// d o d = 0 for every adjacent pair.
inline bool validate_complex(const ChainComplex& c) {
    for (int k = c.lowest_index() + 2; k <= c.highest_index(); ++k)
        if (!(c.differential(k - 1) * c.differential(k)).is_zero()) return false;
    return true;
}

/// b_k = r_k - rank_K(d_k) - rank_K(d_{k+1}); may be negative.
inline int k_betti(const ChainComplex& c, const HereditarySet& hset, int k) {
    return c.rank(k) - k_rank(c.differential(k), hset) - k_rank(c.differential(k + 1), hset);
}

inline ChainComplex induced_complex(const GroupHom& p, const ChainComplex& c) {
    if (p.cols != c.ambient_rank())
        throw std::invalid_argument("induced_complex: homomorphism domain mismatch");
    std::vector<PolyMatrix> diffs;
    diffs.reserve(c.differentials().size());
    for (const auto& d : c.differentials()) diffs.push_back(induced_map(p, d));
    return ChainComplex(c.ring(), p.rows, c.lowest_index(), c.ranks(), std::move(diffs));
}

/// Locus of those p raising the k-th K-Betti number by more than q. The
/// jump happens iff for some j in [0, q+1] the rank of d_k drops by at
/// least q+1-j while the rank of d_{k+1} drops by at least j; each j
/// contributes the pairwise intersections of the two drop loci.
inline JumpLocus betti_jump_locus(const ChainComplex& c, const HereditarySet& hset, int k, int q,
                                  const LocusOptions& opts = {}) {
    if (q < 0) throw std::invalid_argument("betti_jump_locus: negative q");
    const PolyMatrix dk = c.differential(k);
    const PolyMatrix dk1 = c.differential(k + 1);
    JumpLocus result = empty_locus(c.ambient_rank());
    for (int j = 0; j <= q + 1; ++j) {
        JumpLocus left = rank_drop_locus(dk, hset, q + 1 - j, opts);
        if (left.is_empty()) continue;
        JumpLocus right = rank_drop_locus(dk1, hset, j, opts);
        if (right.is_empty()) continue;
        result = locus_union(result, locus_conjunction(left, right, opts.prune), opts.prune);
    }
    return result;
}

inline VerificationReport verify_betti_locus(const ChainComplex& c, const HereditarySet& hset,
                                             const JumpLocus& locus, int k, int q, int t,
                                             std::int64_t box, const VerifyOptions& vopts = {}) {
    if (t < 1 || box < 1)
        throw std::invalid_argument("verify_betti_locus: need t >= 1 and box >= 1");
    const int base = k_betti(c, hset, k);
    return detail::run_box_verification(
        c.ambient_rank(), t, box, vopts, [&](const GroupHom& p) {
            const bool jumped = k_betti(induced_complex(p, c), hset, k) > base + q;
            const bool member = locus_membership(locus, p);
            return std::tuple<bool, bool, bool>(member == jumped, member, jumped);
        });
}

inline VerificationReport verify_betti_locus(const ChainComplex& c, const HereditarySet& hset,
                                             int k, int q, int t, std::int64_t box,
                                             const VerifyOptions& vopts = {},
                                             const LocusOptions& lopts = {}) {
    return verify_betti_locus(c, hset, betti_jump_locus(c, hset, k, q, lopts), k, q, t, box,
                              vopts);
}

/// For i = k, k+1 and each positive minor size j up to the K-rank of D_i:
/// does some j-minor have nonzero augmentation, i.e. lie outside the
/// augmentation ideal? Expected to hold whenever the q = 0 jump locus at k
/// is empty.
struct AugmentationMinorReport {
    struct Entry {
        int differential_index;
        int minor_size;
        bool found;
    };
    std::vector<Entry> entries;
    bool all_found = true;
};

inline AugmentationMinorReport minors_outside_augmentation(const ChainComplex& c,
                                                           const HereditarySet& hset, int k) {
    AugmentationMinorReport report;
    for (int i = k; i <= k + 1; ++i) {
        const PolyMatrix d = c.differential(i);
        const int r = k_rank(d, hset);
        for (int j = 1; j <= r; ++j) {
            bool found = false;
            for (const auto& minor : minors(d, j))
                if (augmentation(minor) != 0) {
                    found = true;
                    break;
                }
            report.entries.push_back({i, j, found});
            report.all_found = report.all_found && found;
        }
    }
    return report;
}

}  // namespace jumploci
