#pragma once

#include "jumploci/lattice.hpp"
#include "jumploci/laurent.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jumploci {

inline constexpr std::size_t kDefaultMaxSupport = 12;

/// Bell-number blowup guard for set-partition enumeration.
class SupportTooLarge : public std::runtime_error {
public:
    SupportTooLarge(std::size_t size, std::size_t cap)
        : std::runtime_error("support of size " + std::to_string(size) +
                             " exceeds the partition cap " + std::to_string(cap)) {}
};

/// Set partition of a finite set of exponent vectors, in restricted-growth
/// normal form: parts are listed by smallest member index, members ascending.
struct Partition {
    int ambient_rank = 0;
    std::vector<ExponentVector> ground;           // distinct, in canonical order
    std::vector<std::vector<std::size_t>> parts;  // disjoint, nonempty, cover ground

    std::size_t size() const { return parts.size(); }

    bool has_part_with_two_elements() const {
        for (const auto& part : parts)
            if (part.size() >= 2) return true;
        return false;
    }
};

/// Streams every set partition of the ground set exactly once, in
/// lexicographic order of restricted growth strings. The empty ground set
/// yields exactly the empty partition.
class PartitionEnumerator {
public:
    PartitionEnumerator(int ambient_rank, std::vector<ExponentVector> ground,
                        std::size_t max_size = kDefaultMaxSupport)
        : ambient_rank_(ambient_rank), ground_(std::move(ground)) {
        if (ground_.size() > max_size) throw SupportTooLarge(ground_.size(), max_size);
        for (const auto& e : ground_)
            if (static_cast<int>(e.size()) != ambient_rank_)
                throw std::invalid_argument("PartitionEnumerator: rank mismatch in ground set");
        rgs_.assign(ground_.size(), 0);
        prefix_max_.assign(ground_.size(), 0);
    }

    std::optional<Partition> next() {
        if (done_) return std::nullopt;
        Partition current = build();
        advance();
        return current;
    }

private:
    Partition build() const {
        Partition p;
        p.ambient_rank = ambient_rank_;
        p.ground = ground_;
        std::size_t k = 0;
        for (std::size_t v : rgs_) k = std::max(k, v + 1);
        p.parts.assign(rgs_.empty() ? 0 : k, {});
        for (std::size_t i = 0; i < rgs_.size(); ++i) p.parts[rgs_[i]].push_back(i);
        return p;
    }

    void advance() {
        const std::size_t n = rgs_.size();
        if (n <= 1) {
            done_ = true;
            return;
        }
        // prefix_max_[i] = max of rgs_[0..i-1]; rgs_[i] may rise to prefix_max_[i] + 1
        for (std::size_t i = 1; i < n; ++i)
            prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i - 1]);
        std::size_t i = n;
        while (i-- > 1) {
            if (rgs_[i] <= prefix_max_[i]) {
                ++rgs_[i];
                for (std::size_t j = i + 1; j < n; ++j) rgs_[j] = 0;
                return;
            }
        }
        done_ = true;
    }

    int ambient_rank_;
    std::vector<ExponentVector> ground_;
    std::vector<std::size_t> rgs_;
    std::vector<std::size_t> prefix_max_;
    bool done_ = false;
};

/// Canonical ground set for partition enumeration: the union support of the
/// generators, sorted.
inline std::vector<ExponentVector> partition_ground(const std::vector<LaurentPoly>& gens) {
    auto supp = support(gens);
    return std::vector<ExponentVector>(supp.begin(), supp.end());
}

/// Ideal generated by all part sums: for each generator and each part, the
/// sum of that generator's coefficients over the part.
inline PrincipalIdeal partition_ideal(const Ring& ring, const std::vector<LaurentPoly>& gens,
                                      const Partition& pi) {
    if (pi.ground != partition_ground(gens))
        throw std::invalid_argument("partition_ideal: partition ground != support of generators");
    std::vector<Int> sums;
    for (const auto& f : gens) {
        if (f.ring() != ring) throw std::invalid_argument("partition_ideal: ring mismatch");
        for (const auto& part : pi.parts) {
            Int s = 0;
            for (std::size_t idx : part) s = ring.add(s, f.coefficient(pi.ground[idx]));
            sums.push_back(std::move(s));
        }
    }
    return ideal_from_generators(ring, sums);
}

inline bool is_k_partition(const Ring& ring, const std::vector<LaurentPoly>& gens,
                           const Partition& pi, const HereditarySet& hset) {
    return hset_contains(ring, hset, partition_ideal(ring, gens, pi));
}

/// The subgroup of Z^s of functionals constant on every part, computed as
/// the integer kernel of the spanning part differences. Always saturated;
/// the full lattice when all parts are singletons.
inline Sublattice partition_subgroup(const Partition& pi) {
    IntMat diffs;
    for (const auto& part : pi.parts)
        for (std::size_t i = 1; i < part.size(); ++i) {
            const ExponentVector& a = pi.ground[part[i]];
            const ExponentVector& b = pi.ground[part[0]];
            std::vector<Int> row(a.size());
            for (std::size_t c = 0; c < a.size(); ++c) row[c] = Int(a[c]) - Int(b[c]);
            diffs.push_back(std::move(row));
        }
    return kernel_lattice(diffs, pi.ambient_rank);
}

}  // namespace jumploci
