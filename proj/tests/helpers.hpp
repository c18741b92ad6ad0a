#pragma once

// Deterministic instance generators shared by the unit and acceptance
// suites. Everything is seeded; reruns see identical instances.

#include "jumploci/jumploci.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testgen {

using namespace jumploci;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Ring random_ring(Rng& rng) {
    switch (uniform(rng, 0, 2)) {
        case 0: return Ring::integers();
        case 1: return Ring::integers_mod(6);
        default: return Ring::integers_mod(4);
    }
}

/// Pool of distinct exponent vectors; every generated polynomial draws its
/// support from the pool, which keeps union supports enumerable.
inline std::vector<ExponentVector> random_exponent_pool(Rng& rng, int ambient_rank,
                                                        int pool_size, int coord_bound) {
    std::vector<ExponentVector> pool;
    int attempts = 0;
    while (static_cast<int>(pool.size()) < pool_size && attempts++ < 200) {
        ExponentVector e(static_cast<std::size_t>(ambient_rank));
        for (auto& x : e) x = uniform(rng, -coord_bound, coord_bound);
        if (std::find(pool.begin(), pool.end(), e) == pool.end()) pool.push_back(std::move(e));
    }
    return pool;
}

inline Int random_coefficient(Rng& rng, const Ring& ring, int bound = 4) {
    if (ring.is_integers()) return Int(uniform(rng, -bound, bound));
    const int n = ring.modulus().convert_to<int>();
    return Int(uniform(rng, 0, n - 1));
}

inline LaurentPoly random_poly(Rng& rng, const Ring& ring, int ambient_rank,
                               const std::vector<ExponentVector>& pool, int max_terms) {
    LaurentPoly f(ring, ambient_rank);
    const int terms = uniform(rng, 0, max_terms);
    for (int i = 0; i < terms && !pool.empty(); ++i)
        f.add_term(pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pool.size()) - 1))],
                   random_coefficient(rng, ring));
    return f;
}

inline std::vector<LaurentPoly> random_module(Rng& rng, const Ring& ring, int ambient_rank,
                                              int max_gens, int pool_size, int max_terms,
                                              int coord_bound = 2) {
    auto pool = random_exponent_pool(rng, ambient_rank, pool_size, coord_bound);
    std::vector<LaurentPoly> gens;
    const int count = uniform(rng, 1, max_gens);
    for (int i = 0; i < count; ++i)
        gens.push_back(random_poly(rng, ring, ambient_rank, pool, max_terms));
    return gens;
}

/// K0, K1, or containment in a random proper ideal.
inline HereditarySet random_hset(Rng& rng, const Ring& ring) {
    switch (uniform(rng, 0, 2)) {
        case 0: return HereditarySet::k0();
        case 1: return HereditarySet::k1();
        default: break;
    }
    if (ring.is_integers()) return HereditarySet::subset_of(PrincipalIdeal{Int(uniform(rng, 2, 6))});
    auto ideals = all_ideals(ring);
    return HereditarySet::subset_of(ideals[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<int>(ideals.size()) - 2))]);  // skip the unit ideal
}

inline GroupHom random_hom(Rng& rng, int t, int s, int bound) {
    GroupHom p = GroupHom::zero(t, s);
    for (auto& row : p.matrix)
        for (auto& x : row) x = uniform(rng, -bound, bound);
    return p;
}

inline PolyMatrix random_matrix(Rng& rng, const Ring& ring, int ambient_rank, int rows, int cols,
                                const std::vector<ExponentVector>& pool, int max_terms) {
    PolyMatrix a(ring, ambient_rank, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            a.set(i, j, random_poly(rng, ring, ambient_rank, pool, max_terms));
    return a;
}

/// Random chain complex with d o d = 0, assembled from constructions that
/// guarantee the chain condition: a single differential, a length-two
/// complex (f g; then -g, f stacked), or a cone of the identity on a
/// one-differential complex. Optionally scales differentials, which
/// preserves the chain condition.
inline ChainComplex random_valid_complex(Rng& rng, const Ring& ring, int ambient_rank,
                                         const std::vector<ExponentVector>& pool,
                                         int max_terms) {
    const int shape = uniform(rng, 0, 3);
    auto poly = [&]() { return random_poly(rng, ring, ambient_rank, pool, max_terms); };
    const int lowest = uniform(rng, -1, 1);
    if (shape == 0) {
        // one differential, arbitrary shape up to 2x2
        const int r0 = uniform(rng, 1, 2), r1 = uniform(rng, 1, 2);
        PolyMatrix d(ring, ambient_rank, r0, r1);
        for (int i = 0; i < r0; ++i)
            for (int j = 0; j < r1; ++j) d.set(i, j, poly());
        return ChainComplex(ring, ambient_rank, lowest, {r0, r1}, {d});
    }
    if (shape == 1) {
        // 0 -> R -> R^2 -> R -> 0 with d1 = [f g], d2 = [-g; f]
        LaurentPoly f = poly(), g = poly();
        PolyMatrix d1(ring, ambient_rank, 1, 2);
        d1.set(0, 0, f);
        d1.set(0, 1, g);
        PolyMatrix d2(ring, ambient_rank, 2, 1);
        d2.set(0, 0, -g);
        d2.set(1, 0, f);
        return ChainComplex(ring, ambient_rank, lowest, {1, 2, 1}, {d1, d2});
    }
    if (shape == 2) {
        // cone of the identity on (A : R^a -> R^b): contractible
        const int a = uniform(rng, 1, 1), b = uniform(rng, 1, 1);
        PolyMatrix mat(ring, ambient_rank, b, a);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) mat.set(i, j, poly());
        PolyMatrix d1(ring, ambient_rank, b, b + a);
        for (int i = 0; i < b; ++i) d1.set(i, i, LaurentPoly::constant(ring, ambient_rank, 1));
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) d1.set(i, b + j, mat.at(i, j));
        PolyMatrix d2(ring, ambient_rank, b + a, a);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < a; ++j) d2.set(i, j, -mat.at(i, j));
        for (int j = 0; j < a; ++j)
            d2.set(b + j, j, LaurentPoly::constant(ring, ambient_rank, 1));
        return ChainComplex(ring, ambient_rank, lowest, {b, b + a, a}, {d1, d2});
    }
    // scaled two-step: d1 = u*[f g], d2 = v*[-g; f] still composes to zero
    LaurentPoly f = poly(), g = poly(), u = poly(), v = poly();
    PolyMatrix d1(ring, ambient_rank, 1, 2);
    d1.set(0, 0, u * f);
    d1.set(0, 1, u * g);
    PolyMatrix d2(ring, ambient_rank, 2, 1);
    d2.set(0, 0, -(v * g));
    d2.set(1, 0, v * f);
    return ChainComplex(ring, ambient_rank, lowest, {1, 2, 1}, {d1, d2});
}

/// Cone of the identity on the one-differential complex R^a --A--> R^b, a
/// contractible complex with differentials [I | A] and [-A; I].
inline ChainComplex identity_cone(const Ring& ring, int ambient_rank, const PolyMatrix& a,
                                  int lowest = 0) {
    const int m = a.rows(), n = a.cols();
    PolyMatrix d1(ring, ambient_rank, m, m + n);
    for (int i = 0; i < m; ++i) d1.set(i, i, LaurentPoly::constant(ring, ambient_rank, 1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) d1.set(i, m + j, a.at(i, j));
    PolyMatrix d2(ring, ambient_rank, m + n, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) d2.set(i, j, -a.at(i, j));
    for (int j = 0; j < n; ++j) d2.set(m + j, j, LaurentPoly::constant(ring, ambient_rank, 1));
    return ChainComplex(ring, ambient_rank, lowest, {m, m + n, n}, {d1, d2});
}

}  // namespace testgen
