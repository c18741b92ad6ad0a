#pragma once

#include "jumploci/json_io.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jumploci {

/// Limits and tuning for one CLI job. The *_forced flags mark values pinned
/// on the command line, which win over the job document.
struct JobOptions {
    std::size_t max_support = kDefaultMaxSupport;
    bool max_support_forced = false;
    std::uint64_t budget = 1'000'000;
    bool budget_forced = false;
    int threads = 1;
    bool prune = true;
    bool prune_forced = false;
};

struct JobOutcome {
    int exit_code = 0;       // 0 ok, 1 disagreement, 2 input error, 3 limits
    json output;             // empty on error
    std::string error;       // diagnostic for stderr
};

namespace detail {

struct JobContext {
    Ring ring = Ring::integers();
    LocusOptions lopts;
    VerifyOptions vopts;
};

inline int job_int(const json& job, const char* name, std::int64_t lo, std::int64_t hi) {
    return static_cast<int>(small_int(require_field(job, name), name, lo, hi));
}

inline std::vector<std::vector<LaurentPoly>> job_modules(const Ring& ring, const json& job,
                                                         int& ambient) {
    std::vector<std::vector<LaurentPoly>> modules;
    if (auto it = job.find("generators"); it != job.end()) {
        std::vector<LaurentPoly> gens;
        for (const json& jf : *it) gens.push_back(laurent_from_json(ring, jf));
        modules.push_back(std::move(gens));
    } else if (auto jt = job.find("modules"); jt != job.end()) {
        for (const json& jm : *jt) {
            std::vector<LaurentPoly> gens;
            for (const json& jf : jm) gens.push_back(laurent_from_json(ring, jf));
            modules.push_back(std::move(gens));
        }
    } else {
        throw std::invalid_argument("expected \"generators\" or \"modules\"");
    }
    ambient = -1;
    for (const auto& gens : modules)
        for (const auto& f : gens) ambient = f.ambient_rank();
    if (auto it = job.find("s"); it != job.end())
        ambient = static_cast<int>(small_int(*it, "s", 0, kMaxDimension));
    if (ambient < 0)
        throw std::invalid_argument("ambient rank undetermined; supply \"s\"");
    for (const auto& gens : modules)
        for (const auto& f : gens)
            if (f.ambient_rank() != ambient)
                throw std::invalid_argument("generators have mixed ambient ranks");
    return modules;
}

inline json module_locus_output(const Ring& ring, int ambient,
                                const std::vector<std::vector<LaurentPoly>>& modules,
                                const HereditarySet& hset, const JumpLocus& locus,
                                std::size_t max_support, bool single_module) {
    json out = locus_to_json(locus);
    if (single_module) {
        out["k_partitions"] = count_k_partitions(ring, ambient, modules[0], hset, max_support);
        if (support(modules[0]).empty()) out["trivial_module"] = true;
    } else {
        json counts = json::array();
        json trivial = json::array();
        for (std::size_t i = 0; i < modules.size(); ++i) {
            counts.push_back(count_k_partitions(ring, ambient, modules[i], hset, max_support));
            if (support(modules[i]).empty()) trivial.push_back(i);
        }
        out["k_partitions"] = std::move(counts);
        if (!trivial.empty()) out["trivial_modules"] = std::move(trivial);
    }
    return out;
}

}  // namespace detail

/// Runs one job document and returns the JSON answer plus the process exit
/// code; never throws for malformed input or exceeded limits.
inline JobOutcome run_job(const json& job, JobOptions opts = {}) {
    JobOutcome outcome;
    try {
        if (!job.is_object()) throw std::invalid_argument("job: expected a JSON object");
        if (!opts.max_support_forced)
            if (auto it = job.find("max_support"); it != job.end())
                opts.max_support = static_cast<std::size_t>(
                    detail::small_int(*it, "max_support", 0, 24));
        if (!opts.budget_forced)
            if (auto it = job.find("budget"); it != job.end())
                opts.budget = static_cast<std::uint64_t>(
                    detail::small_int(*it, "budget", 1, 1'000'000'000));
        if (!opts.prune_forced)
            if (auto it = job.find("prune"); it != job.end()) {
                if (!it->is_boolean())
                    throw std::invalid_argument("prune: expected a boolean");
                opts.prune = it->get<bool>();
            }
        const LocusOptions lopts{opts.max_support, opts.prune};
        const VerifyOptions vopts{opts.budget, opts.threads};

        const std::string command =
            detail::require_field(job, "command").get<std::string>();
        const Ring ring = ring_from_json(detail::require_field(job, "ring"));
        auto hset_of = [&]() {
            HereditarySet h = hset_from_json(ring, detail::require_field(job, "hset"));
            validate_hset(ring, h);
            return h;
        };

        if (command == "rank") {
            const HereditarySet hset = hset_of();
            const PolyMatrix a = matrix_from_json(ring, detail::require_field(job, "matrix"));
            outcome.output = json{{"rank", k_rank(a, hset)}};
        } else if (command == "mccoy-rank") {
            const PolyMatrix a = matrix_from_json(ring, detail::require_field(job, "matrix"));
            outcome.output = json{{"rank", mccoy_rank(a)}};
        } else if (command == "locus-module") {
            const HereditarySet hset = hset_of();
            int ambient = 0;
            const auto modules = detail::job_modules(ring, job, ambient);
            const JumpLocus locus =
                multi_module_jump_locus(ring, ambient, modules, hset, lopts);
            outcome.output = detail::module_locus_output(
                ring, ambient, modules, hset, locus, opts.max_support,
                job.contains("generators"));
        } else if (command == "locus-matrix") {
            const HereditarySet hset = hset_of();
            const int q = detail::job_int(job, "q", 0, 1 << 10);
            std::vector<PolyMatrix> as;
            for (const json& jm : detail::require_field(job, "matrices"))
                as.push_back(matrix_from_json(ring, jm));
            outcome.output = locus_to_json(rank_jump_locus(as, hset, q, lopts));
        } else if (command == "betti") {
            const HereditarySet hset = hset_of();
            const ChainComplex c =
                complex_from_json(ring, detail::require_field(job, "complex"));
            const int k = detail::job_int(job, "k", -(1 << 20), 1 << 20);
            outcome.output = json{{"betti", k_betti(c, hset, k)}};
        } else if (command == "locus-betti") {
            const HereditarySet hset = hset_of();
            const ChainComplex c =
                complex_from_json(ring, detail::require_field(job, "complex"));
            const int k = detail::job_int(job, "k", -(1 << 20), 1 << 20);
            const int q = detail::job_int(job, "q", 0, 1 << 10);
            outcome.output = locus_to_json(betti_jump_locus(c, hset, k, q, lopts));
        } else if (command == "verify-module") {
            const HereditarySet hset = hset_of();
            int ambient = 0;
            const auto modules = detail::job_modules(ring, job, ambient);
            const int t = detail::job_int(job, "t", 1, 8);
            const std::int64_t box =
                detail::small_int(detail::require_field(job, "box"), "box", 1, 1 << 20);
            const JumpLocus locus =
                multi_module_jump_locus(ring, ambient, modules, hset, lopts);
            const VerificationReport report =
                verify_locus(ring, ambient, modules, hset, locus, t, box, vopts);
            outcome.output = detail::module_locus_output(
                ring, ambient, modules, hset, locus, opts.max_support,
                job.contains("generators"));
            outcome.output["verified"] = report_to_json(report);
            if (!report.ok()) outcome.exit_code = 1;
        } else if (command == "verify-betti") {
            const HereditarySet hset = hset_of();
            const ChainComplex c =
                complex_from_json(ring, detail::require_field(job, "complex"));
            const int k = detail::job_int(job, "k", -(1 << 20), 1 << 20);
            const int q = detail::job_int(job, "q", 0, 1 << 10);
            const int t = detail::job_int(job, "t", 1, 8);
            const std::int64_t box =
                detail::small_int(detail::require_field(job, "box"), "box", 1, 1 << 20);
            const JumpLocus locus = betti_jump_locus(c, hset, k, q, lopts);
            const VerificationReport report =
                verify_betti_locus(c, hset, locus, k, q, t, box, vopts);
            outcome.output = locus_to_json(locus);
            outcome.output["verified"] = report_to_json(report);
            if (!report.ok()) outcome.exit_code = 1;
        } else {
            throw std::invalid_argument("unknown command \"" + command + "\"");
        }
    } catch (const SupportTooLarge& e) {
        outcome.exit_code = 3;
        outcome.error = e.what();
    } catch (const BudgetExceeded& e) {
        outcome.exit_code = 3;
        outcome.error = e.what();
    } catch (const json::exception& e) {
        outcome.exit_code = 2;
        outcome.error = e.what();
    } catch (const std::invalid_argument& e) {
        outcome.exit_code = 2;
        outcome.error = e.what();
    }
    return outcome;
}

}  // namespace jumploci
