#include "jumploci/locus.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace jumploci;
using testgen::Rng;

namespace {

const Ring Z = Ring::integers();

LaurentPoly x1_minus_x2() {
    return LaurentPoly::from_terms(Z, 2, {{{1, 0}, 1}, {{0, 1}, -1}});
}

LaurentPoly x1_plus_x2(const Ring& ring) {
    return LaurentPoly::from_terms(ring, 2, {{{1, 0}, 1}, {{0, 1}, 1}});
}

}  // namespace

TEST_CASE("module locus of pinned examples", "[locus]") {
    {
        JumpLocus locus = module_jump_locus(Z, 2, {x1_minus_x2()}, HereditarySet::k0());
        REQUIRE(locus.groups.size() == 1);
        CHECK(locus.groups[0].group.basis() == IntMat{{1, 1}});
        CHECK(locus.groups[0].proper);
        CHECK(count_k_partitions(Z, 2, {x1_minus_x2()}, HereditarySet::k0()) == 1);
    }
    {
        JumpLocus locus = module_jump_locus(Z, 2, {x1_plus_x2(Z)}, HereditarySet::k0());
        CHECK(locus.is_empty());
    }
    {
        const Ring z2 = Ring::integers_mod(2);
        JumpLocus locus = module_jump_locus(z2, 2, {x1_plus_x2(z2)}, HereditarySet::k0());
        REQUIRE(locus.groups.size() == 1);
        CHECK(locus.groups[0].group.basis() == IntMat{{1, 1}});
    }
    {
        // generators of the zero module accept every homomorphism
        JumpLocus locus = module_jump_locus(Z, 2, {LaurentPoly(Z, 2)}, HereditarySet::k0());
        REQUIRE(locus.groups.size() == 1);
        CHECK(locus.groups[0].group.is_full());
        CHECK_FALSE(locus.groups[0].proper);
    }
}

TEST_CASE("multi-module locus of pinned examples", "[locus]") {
    {
        JumpLocus single = module_jump_locus(Z, 2, {x1_minus_x2()}, HereditarySet::k0());
        JumpLocus multi =
            multi_module_jump_locus(Z, 2, {{x1_minus_x2()}}, HereditarySet::k0());
        REQUIRE(multi.groups.size() == single.groups.size());
        CHECK(multi.groups[0].group == single.groups[0].group);
    }
    {
        JumpLocus locus = multi_module_jump_locus(Z, 2, {}, HereditarySet::k0());
        REQUIRE(locus.groups.size() == 1);
        CHECK(locus.groups[0].group.is_full());
    }
    {
        LaurentPoly d12 = LaurentPoly::from_terms(Z, 3, {{{1, 0, 0}, 1}, {{0, 1, 0}, -1}});
        LaurentPoly d13 = LaurentPoly::from_terms(Z, 3, {{{1, 0, 0}, 1}, {{0, 0, 1}, -1}});
        JumpLocus locus =
            multi_module_jump_locus(Z, 3, {{d12}, {d13}}, HereditarySet::k0());
        REQUIRE(locus.groups.size() == 1);
        CHECK(locus.groups[0].group == Sublattice::from_rows(3, {{1, 1, 1}}));
        VerificationReport report = verify_locus(Z, 3, {{d12}, {d13}}, HereditarySet::k0(),
                                                 locus, 1, 2);
        CHECK(report.disagreements == 0);
    }
}

TEST_CASE("locus membership", "[locus]") {
    JumpLocus diag = make_locus(2, {Sublattice::from_rows(2, {{1, 1}})}, true);
    GroupHom inside = GroupHom::zero(2, 2);
    inside.matrix = {{2, 2}, {5, 5}};
    CHECK(locus_membership(diag, inside));
    GroupHom outside = GroupHom::zero(2, 2);
    outside.matrix = {{1, 1}, {1, 0}};
    CHECK_FALSE(locus_membership(diag, outside));
    CHECK_FALSE(locus_membership(empty_locus(2), inside));
    CHECK(locus_membership(full_locus(2), outside));

    // rows split across two groups never count: all rows must share one group
    JumpLocus axes = make_locus(
        2, {Sublattice::from_rows(2, {{1, 0}}), Sublattice::from_rows(2, {{0, 1}})}, true);
    GroupHom split = GroupHom::zero(2, 2);
    split.matrix = {{1, 0}, {0, 1}};
    CHECK_FALSE(locus_membership(axes, split));
    GroupHom aligned = GroupHom::zero(2, 2);
    aligned.matrix = {{1, 0}, {2, 0}};
    CHECK(locus_membership(axes, aligned));
}

TEST_CASE("brute-force oracle on pinned examples", "[locus]") {
    GroupHom collapse = GroupHom::zero(1, 2);
    collapse.matrix = {{1, 1}};
    CHECK(brute_force_is_k_module(Z, {x1_minus_x2()}, HereditarySet::k0(), collapse));
    CHECK_FALSE(brute_force_is_k_module(Z, {x1_minus_x2()}, HereditarySet::k0(),
                                        GroupHom::identity(2)));
    const Ring z6 = Ring::integers_mod(6);
    LaurentPoly threex = LaurentPoly::monomial(z6, 1, {1}, 3);
    CHECK(brute_force_is_k_module(z6, {threex}, HereditarySet::k1(), GroupHom::zero(1, 1)));
}

TEST_CASE("box verification of pinned examples", "[locus]") {
    {
        VerificationReport r =
            verify_locus(Z, 2, {{x1_minus_x2()}}, HereditarySet::k0(), 1, 2);
        CHECK(r.checked == 25);
        CHECK(r.disagreements == 0);
    }
    {
        JumpLocus locus = module_jump_locus(Z, 2, {x1_plus_x2(Z)}, HereditarySet::k0());
        CHECK(locus.is_empty());
        VerificationReport r =
            verify_locus(Z, 2, {{x1_plus_x2(Z)}}, HereditarySet::k0(), locus, 1, 2);
        CHECK(r.disagreements == 0);
    }
    {
        LaurentPoly xm1 = LaurentPoly::from_terms(Z, 1, {{{1}, 1}, {{0}, -1}});
        JumpLocus locus = module_jump_locus(Z, 1, {xm1}, HereditarySet::k0());
        REQUIRE(locus.groups.size() == 1);
        CHECK(locus.groups[0].group.rank() == 0);  // only p = 0 annihilates
        VerificationReport r = verify_locus(Z, 1, {{xm1}}, HereditarySet::k0(), locus, 1, 3);
        CHECK(r.checked == 7);
        CHECK(r.disagreements == 0);
    }
}

TEST_CASE("box enumeration hits every homomorphism once", "[locus]") {
    const int s = 2, t = 2;
    const std::int64_t box = 1;
    const std::uint64_t total = hom_box_size(s, t, box, 1'000'000);
    CHECK(total == 81);
    std::set<std::vector<std::vector<std::int64_t>>> seen;
    for (std::uint64_t i = 0; i < total; ++i) {
        GroupHom p = hom_from_index(i, t, s, box);
        for (const auto& row : p.matrix)
            for (std::int64_t x : row) CHECK((x >= -box && x <= box));
        seen.insert(p.matrix);
    }
    CHECK(seen.size() == total);
    CHECK_THROWS_AS(hom_box_size(3, 2, 3, 1000), BudgetExceeded);
}

TEST_CASE("locus computation agrees with the oracle on random modules", "[locus]") {
    Rng rng(4001);
    for (int trial = 0; trial < 60; ++trial) {
        const Ring ring = testgen::uniform(rng, 0, 1) ? Ring::integers() : Ring::integers_mod(6);
        const int s = testgen::uniform(rng, 1, 3);
        const int t = testgen::uniform(rng, 1, 2);
        auto gens = testgen::random_module(rng, ring, s, 3, 5, 3);
        const HereditarySet hset = testgen::random_hset(rng, ring);
        VerificationReport r = verify_locus(ring, s, {gens}, hset, t, 3);
        INFO("trial " << trial);
        CHECK(r.disagreements == 0);
    }
}

TEST_CASE("loci of non-K-sets consist of proper groups", "[locus]") {
    Rng rng(4002);
    int hits = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const Ring ring = testgen::random_ring(rng);
        const int s = testgen::uniform(rng, 1, 3);
        auto gens = testgen::random_module(rng, ring, s, 3, 5, 3);
        const HereditarySet hset = testgen::random_hset(rng, ring);
        if (is_k_set(ring, gens, hset)) continue;
        ++hits;
        JumpLocus locus = module_jump_locus(ring, s, gens, hset);
        CHECK_FALSE(locus.contains_full_lattice());
        for (const auto& g : locus.groups) CHECK(g.proper);
        // the identity homomorphism never lies in a proper locus
        CHECK_FALSE(locus_membership(locus, GroupHom::identity(s)));
    }
    CHECK(hits > 60);
}

TEST_CASE("the locus is inhabited exactly when the zero map works", "[locus]") {
    Rng rng(4003);
    for (int trial = 0; trial < 200; ++trial) {
        const Ring ring = testgen::random_ring(rng);
        const int s = testgen::uniform(rng, 1, 3);
        auto gens = testgen::random_module(rng, ring, s, 3, 5, 3);
        const HereditarySet hset = testgen::random_hset(rng, ring);
        JumpLocus locus = module_jump_locus(ring, s, gens, hset);
        const bool zero_works =
            brute_force_is_k_module(ring, gens, hset, GroupHom::zero(1, s));
        CHECK(!locus.is_empty() == zero_works);
        CHECK(locus_membership(locus, GroupHom::zero(1, s)) == zero_works);
    }
}

TEST_CASE("augmentation-free generators force a non-empty locus", "[locus]") {
    Rng rng(4004);
    for (int trial = 0; trial < 100; ++trial) {
        const Ring ring = testgen::random_ring(rng);
        const int s = testgen::uniform(rng, 1, 3);
        auto pool = testgen::random_exponent_pool(rng, s, 4, 2);
        std::vector<LaurentPoly> gens;
        for (int i = testgen::uniform(rng, 1, 3); i-- > 0;) {
            LaurentPoly f = testgen::random_poly(rng, ring, s, pool, 3);
            f.add_term(ExponentVector(static_cast<std::size_t>(s), 0),
                       ring.neg(augmentation(f)));
            gens.push_back(std::move(f));
        }
        JumpLocus locus = module_jump_locus(ring, s, gens, testgen::random_hset(rng, ring));
        CHECK_FALSE(locus.is_empty());
    }
}

TEST_CASE("extra generators never enlarge the accepted set", "[locus]") {
    Rng rng(4005);
    for (int trial = 0; trial < 50; ++trial) {
        const Ring ring = testgen::random_ring(rng);
        const int s = testgen::uniform(rng, 1, 2);
        auto pool = testgen::random_exponent_pool(rng, s, 4, 2);
        auto gens = testgen::random_module(rng, ring, s, 2, 4, 3);
        auto extended = gens;
        extended.push_back(testgen::random_poly(rng, ring, s, pool, 3));
        const HereditarySet hset = testgen::random_hset(rng, ring);
        const std::uint64_t total = hom_box_size(s, 1, 2, 1'000'000);
        for (std::uint64_t i = 0; i < total; ++i) {
            GroupHom p = hom_from_index(i, 1, s, 2);
            if (brute_force_is_k_module(ring, extended, hset, p))
                CHECK(brute_force_is_k_module(ring, gens, hset, p));
        }
    }
}

TEST_CASE("pruning leaves membership unchanged", "[locus]") {
    Rng rng(4006);
    for (int trial = 0; trial < 40; ++trial) {
        const Ring ring = testgen::random_ring(rng);
        const int s = testgen::uniform(rng, 1, 3);
        auto gens = testgen::random_module(rng, ring, s, 3, 5, 3);
        const HereditarySet hset = testgen::random_hset(rng, ring);
        JumpLocus pruned = module_jump_locus(ring, s, gens, hset, {kDefaultMaxSupport, true});
        JumpLocus unpruned = module_jump_locus(ring, s, gens, hset, {kDefaultMaxSupport, false});
        CHECK(pruned.groups.size() <= unpruned.groups.size());
        const std::uint64_t total = hom_box_size(s, 1, 2, 1'000'000);
        for (std::uint64_t i = 0; i < total; ++i) {
            GroupHom p = hom_from_index(i, 1, s, 2);
            CHECK(locus_membership(pruned, p) == locus_membership(unpruned, p));
        }
    }
}

TEST_CASE("parallel verification is deterministic", "[locus]") {
    Rng rng(4007);
    const Ring ring = Ring::integers_mod(6);
    auto gens = testgen::random_module(rng, ring, 2, 3, 5, 3);
    const HereditarySet hset = HereditarySet::k0();
    JumpLocus locus = module_jump_locus(ring, 2, gens, hset);
    VerificationReport serial = verify_locus(ring, 2, {gens}, hset, locus, 2, 2, {1000000, 1});
    VerificationReport parallel = verify_locus(ring, 2, {gens}, hset, locus, 2, 2, {1000000, 4});
    CHECK(serial.checked == parallel.checked);
    CHECK(serial.disagreements == parallel.disagreements);
    CHECK(serial.first_counterexample.has_value() ==
          parallel.first_counterexample.has_value());
}

TEST_CASE("conjunction and union behave pointwise", "[locus]") {
    Rng rng(4008);
    for (int trial = 0; trial < 40; ++trial) {
        const int s = testgen::uniform(rng, 1, 3);
        auto rand_locus = [&]() {
            std::vector<Sublattice> groups;
            for (int i = testgen::uniform(rng, 0, 2); i-- > 0;) {
                IntMat rows;
                for (int r = testgen::uniform(rng, 0, s); r-- > 0;) {
                    std::vector<Int> row;
                    for (int c = 0; c < s; ++c) row.push_back(testgen::uniform(rng, -2, 2));
                    rows.push_back(std::move(row));
                }
                groups.push_back(Sublattice::from_rows(s, rows));
            }
            return make_locus(s, std::move(groups), true);
        };
        JumpLocus a = rand_locus(), b = rand_locus();
        JumpLocus conj = locus_conjunction(a, b);
        JumpLocus uni = locus_union(a, b);
        const std::uint64_t total = hom_box_size(s, 2, 1, 1'000'000);
        for (std::uint64_t i = 0; i < total; ++i) {
            GroupHom p = hom_from_index(i, 2, s, 1);
            CHECK(locus_membership(conj, p) ==
                  (locus_membership(a, p) && locus_membership(b, p)));
            CHECK(locus_membership(uni, p) ==
                  (locus_membership(a, p) || locus_membership(b, p)));
        }
    }
}
