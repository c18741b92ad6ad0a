#pragma once

#include "jumploci/lattice.hpp"
#include "jumploci/laurent.hpp"
#include "jumploci/partition.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace jumploci {

class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct LocusOptions {
    std::size_t max_support = kDefaultMaxSupport;
    bool prune = true;  // drop groups contained in another group of the locus
};

struct LocusGroup {
    Sublattice group;
    bool proper;
};

/// Finite family {G_1, ..., G_l} of saturated subgroups of Z^s. A
/// homomorphism p : Z^s -> Z^t belongs to the locus iff all t rows of p lie
/// in one common G_j. Groups are deduplicated and kept in canonical order.
struct JumpLocus {
    int ambient_rank = 0;
    std::vector<LocusGroup> groups;

    bool is_empty() const { return groups.empty(); }

    bool contains_full_lattice() const {
        for (const auto& g : groups)
            if (g.group.is_full()) return true;
        return false;
    }
};

inline JumpLocus make_locus(int ambient_rank, std::vector<Sublattice> groups, bool prune) {
    std::set<Sublattice> unique(std::make_move_iterator(groups.begin()),
                                std::make_move_iterator(groups.end()));
    std::vector<Sublattice> kept;
    for (const auto& g : unique) {
        if (prune) {
            bool redundant = false;
            for (const auto& other : unique)
                if (!(other == g) && other.contains_lattice(g)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
        }
        kept.push_back(g);
    }
    JumpLocus locus;
    locus.ambient_rank = ambient_rank;
    for (auto& g : kept) {
        bool proper = g.is_proper();
        locus.groups.push_back(LocusGroup{std::move(g), proper});
    }
    return locus;
}

inline JumpLocus empty_locus(int ambient_rank) { return make_locus(ambient_rank, {}, false); }

inline JumpLocus full_locus(int ambient_rank) {
    return make_locus(ambient_rank, {Sublattice::full(ambient_rank)}, false);
}

inline bool locus_membership(const JumpLocus& locus, const GroupHom& p) {
    if (p.cols != locus.ambient_rank)
        throw std::invalid_argument("locus_membership: rank mismatch");
    for (const auto& g : locus.groups)
        if (hom_rows_in(g.group, p)) return true;
    return false;
}

/// The family of subgroups characterising those p for which the image of the
/// module spanned by the generators becomes a K-module: one partition
/// subgroup per K-partition of the union support, deduplicated. Generators
/// spanning the zero module yield the full-lattice locus.
inline JumpLocus module_jump_locus(const Ring& ring, int ambient_rank,
                                   const std::vector<LaurentPoly>& gens,
                                   const HereditarySet& hset, const LocusOptions& opts = {}) {
    auto ground = partition_ground(gens);
    PartitionEnumerator en(ambient_rank, ground, opts.max_support);
    std::vector<Sublattice> groups;
    while (auto pi = en.next())
        if (is_k_partition(ring, gens, *pi, hset)) groups.push_back(partition_subgroup(*pi));
    return make_locus(ambient_rank, std::move(groups), opts.prune);
}

/// Number of K-partitions of the union support, before subgroup
/// deduplication.
inline std::uint64_t count_k_partitions(const Ring& ring, int ambient_rank,
                                        const std::vector<LaurentPoly>& gens,
                                        const HereditarySet& hset,
                                        std::size_t max_support = kDefaultMaxSupport) {
    PartitionEnumerator en(ambient_rank, partition_ground(gens), max_support);
    std::uint64_t count = 0;
    while (auto pi = en.next())
        if (is_k_partition(ring, gens, *pi, hset)) ++count;
    return count;
}

/// Locus for a conjunction over several modules: intersections of one
/// K-partition subgroup per module, over all tuples. The empty module list
/// yields the full-lattice locus; a module with no K-partition empties it.
inline JumpLocus multi_module_jump_locus(const Ring& ring, int ambient_rank,
                                         const std::vector<std::vector<LaurentPoly>>& modules,
                                         const HereditarySet& hset,
                                         const LocusOptions& opts = {}) {
    std::vector<std::vector<Sublattice>> per_module;
    for (const auto& gens : modules) {
        JumpLocus single = module_jump_locus(ring, ambient_rank, gens, hset,
                                             LocusOptions{opts.max_support, false});
        std::vector<Sublattice> groups;
        groups.reserve(single.groups.size());
        for (auto& g : single.groups) groups.push_back(std::move(g.group));
        per_module.push_back(std::move(groups));
    }
    std::vector<Sublattice> results;
    // depth-first over tuples; identical partial intersections at the same
    // depth lead to identical subtrees, so they are visited once
    std::set<std::pair<std::size_t, IntMat>> seen;
    std::vector<std::pair<std::size_t, Sublattice>> stack;
    stack.emplace_back(0, Sublattice::full(ambient_rank));
    while (!stack.empty()) {
        auto [depth, current] = std::move(stack.back());
        stack.pop_back();
        if (!seen.emplace(depth, current.basis()).second) continue;
        if (depth == per_module.size()) {
            results.push_back(std::move(current));
            continue;
        }
        for (const auto& g : per_module[depth])
            stack.emplace_back(depth + 1, lattice_intersect(current, g));
    }
    return make_locus(ambient_rank, std::move(results), opts.prune);
}

/// p-membership of the conjunction of two loci: pairwise intersections.
inline JumpLocus locus_conjunction(const JumpLocus& a, const JumpLocus& b, bool prune = true) {
    if (a.ambient_rank != b.ambient_rank)
        throw std::invalid_argument("locus_conjunction: rank mismatch");
    std::vector<Sublattice> groups;
    for (const auto& ga : a.groups)
        for (const auto& gb : b.groups) groups.push_back(lattice_intersect(ga.group, gb.group));
    return make_locus(a.ambient_rank, std::move(groups), prune);
}

inline JumpLocus locus_union(const JumpLocus& a, const JumpLocus& b, bool prune = true) {
    if (a.ambient_rank != b.ambient_rank)
        throw std::invalid_argument("locus_union: rank mismatch");
    std::vector<Sublattice> groups;
    for (const auto& g : a.groups) groups.push_back(g.group);
    for (const auto& g : b.groups) groups.push_back(g.group);
    return make_locus(a.ambient_rank, std::move(groups), prune);
}

/// Direct evaluation of the defining condition: push every generator through
/// p and test whether the images form a K-set. This is the oracle the locus
/// computations are verified against.
inline bool brute_force_is_k_module(const Ring& ring, const std::vector<LaurentPoly>& gens,
                                    const HereditarySet& hset, const GroupHom& p) {
    return is_k_set(ring, induced_map(p, gens), hset);
}

struct VerifyOptions {
    std::uint64_t budget = 1'000'000;  // maximum number of homomorphisms
    int threads = 1;
};

struct Counterexample {
    GroupHom hom;
    bool in_locus = false;
    bool oracle = false;
};

struct VerificationReport {
    int t = 0;
    std::int64_t box = 0;
    std::uint64_t checked = 0;
    std::uint64_t disagreements = 0;
    std::optional<Counterexample> first_counterexample;

    bool ok() const { return disagreements == 0; }
};

/// Number of homomorphisms Z^s -> Z^t with entries in [-B, B]; throws once
/// the configured budget is exceeded.
inline std::uint64_t hom_box_size(int s, int t, std::int64_t box, std::uint64_t budget) {
    Int total = 1;
    const Int side = 2 * Int(box) + 1;
    for (int i = 0; i < s * t; ++i) {
        total *= side;
        if (total > budget)
            throw BudgetExceeded("box enumeration of " + total.str() +
                                 "+ homomorphisms exceeds the budget of " +
                                 std::to_string(budget));
    }
    return total.convert_to<std::uint64_t>();
}

/// idx-th homomorphism of the box, entries decoded row-major base (2B+1).
inline GroupHom hom_from_index(std::uint64_t idx, int t, int s, std::int64_t box) {
    GroupHom p = GroupHom::zero(t, s);
    const std::uint64_t side = static_cast<std::uint64_t>(2 * box + 1);
    for (int i = t - 1; i >= 0; --i)
        for (int j = s - 1; j >= 0; --j) {
            p.matrix[i][j] = static_cast<std::int64_t>(idx % side) - box;
            idx /= side;
        }
    return p;
}

namespace detail {

template <typename CheckFn>
VerificationReport run_box_verification(int s, int t, std::int64_t box, const VerifyOptions& opts,
                                        CheckFn&& check) {
    const std::uint64_t total = hom_box_size(s, t, box, opts.budget);
    VerificationReport report;
    report.t = t;
    report.box = box;
    report.checked = total;
    const int threads = std::max(1, opts.threads);
    if (threads == 1 || total < 1024) {
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            GroupHom p = hom_from_index(idx, t, s, box);
            auto [agree, in_locus, oracle] = check(p);
            if (!agree) {
                ++report.disagreements;
                if (!report.first_counterexample)
                    report.first_counterexample = Counterexample{p, in_locus, oracle};
            }
        }
        return report;
    }
    struct Partial {
        std::uint64_t disagreements = 0;
        std::optional<std::pair<std::uint64_t, Counterexample>> first;
    };
    std::vector<Partial> partials(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        workers.emplace_back([&, w]() {
            const std::uint64_t lo = chunk * static_cast<std::uint64_t>(w);
            const std::uint64_t hi = std::min(total, lo + chunk);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                GroupHom p = hom_from_index(idx, t, s, box);
                auto [agree, in_locus, oracle] = check(p);
                if (!agree) {
                    ++partials[w].disagreements;
                    if (!partials[w].first)
                        partials[w].first = {idx, Counterexample{p, in_locus, oracle}};
                }
            }
        });
    }
    for (auto& th : workers) th.join();
    for (const auto& partial : partials) {
        report.disagreements += partial.disagreements;
        if (partial.first && !report.first_counterexample)
            report.first_counterexample = partial.first->second;
    }
    return report;
}

}  // namespace detail

/// Exhaustively compares locus membership against the brute-force oracle
/// over every p in the box; the modules and the locus must refer to the same
/// ambient rank.
inline VerificationReport verify_locus(const Ring& ring, int ambient_rank,
                                       const std::vector<std::vector<LaurentPoly>>& modules,
                                       const HereditarySet& hset, const JumpLocus& locus, int t,
                                       std::int64_t box, const VerifyOptions& opts = {}) {
    if (t < 1 || box < 1) throw std::invalid_argument("verify_locus: need t >= 1 and box >= 1");
    return detail::run_box_verification(
        ambient_rank, t, box, opts, [&](const GroupHom& p) {
            bool oracle = true;
            for (const auto& gens : modules)
                if (!brute_force_is_k_module(ring, gens, hset, p)) {
                    oracle = false;
                    break;
                }
            bool member = locus_membership(locus, p);
            return std::tuple<bool, bool, bool>(member == oracle, member, oracle);
        });
}

inline VerificationReport verify_locus(const Ring& ring, int ambient_rank,
                                       const std::vector<std::vector<LaurentPoly>>& modules,
                                       const HereditarySet& hset, int t, std::int64_t box,
                                       const VerifyOptions& vopts = {},
                                       const LocusOptions& lopts = {}) {
    JumpLocus locus = multi_module_jump_locus(ring, ambient_rank, modules, hset, lopts);
    return verify_locus(ring, ambient_rank, modules, hset, locus, t, box, vopts);
}

}  // namespace jumploci
