#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace jumploci {

using Int = boost::multiprecision::cpp_int;

/// Coefficient ring: the integers, or the integers modulo n (n >= 2).
/// Elements are canonical representatives: arbitrary integers over Z,
/// values in [0, n) over Z/n.
class Ring {
public:
    static Ring integers() { return Ring(Int(0)); }

    static Ring integers_mod(Int n) {
        if (n < 2) throw std::invalid_argument("integers_mod: modulus must be >= 2");
        return Ring(std::move(n));
    }

    bool is_integers() const { return modulus_ == 0; }

    /// 0 for the integers, n for Z/n.
    const Int& modulus() const { return modulus_; }

    /// Canonical representative of x.
    Int normalize(const Int& x) const {
        if (is_integers()) return x;
        Int r = x % modulus_;
        if (r < 0) r += modulus_;
        return r;
    }

    Int add(const Int& a, const Int& b) const { return normalize(a + b); }
    Int sub(const Int& a, const Int& b) const { return normalize(a - b); }
    Int mul(const Int& a, const Int& b) const { return normalize(a * b); }
    Int neg(const Int& a) const { return normalize(-a); }

    bool operator==(const Ring& other) const { return modulus_ == other.modulus_; }
    bool operator!=(const Ring& other) const { return !(*this == other); }

private:
    explicit Ring(Int n) : modulus_(std::move(n)) {}
    Int modulus_;  // 0 = integers
};

/// Ideal of a supported ring in normal form: a single nonnegative generator.
/// Over Z the ideal (g); over Z/n a divisor g of n with the zero ideal stored
/// as g = 0 (never as g = n). Equal ideals have equal generators.
struct PrincipalIdeal {
    Int gen;

    bool is_zero() const { return gen == 0; }
    bool operator==(const PrincipalIdeal& o) const { return gen == o.gen; }
    bool operator!=(const PrincipalIdeal& o) const { return gen != o.gen; }
    bool operator<(const PrincipalIdeal& o) const { return gen < o.gen; }
};

inline PrincipalIdeal zero_ideal() { return PrincipalIdeal{Int(0)}; }
inline PrincipalIdeal unit_ideal() { return PrincipalIdeal{Int(1)}; }

inline bool ideal_valid(const Ring& ring, const PrincipalIdeal& ideal) {
    if (ideal.gen < 0) return false;
    if (ring.is_integers()) return true;
    if (ideal.gen == 0) return true;
    return ideal.gen < ring.modulus() && ring.modulus() % ideal.gen == 0;
}

/// Normal form of the ideal generated by one (lifted) integer.
inline PrincipalIdeal principal_ideal(const Ring& ring, const Int& raw) {
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;
    if (ring.is_integers()) return PrincipalIdeal{abs(raw)};
    Int g = gcd(abs(raw), ring.modulus());
    if (g == ring.modulus()) g = 0;
    return PrincipalIdeal{std::move(g)};
}

inline PrincipalIdeal ideal_from_generators(const Ring& ring, const std::vector<Int>& gens) {
    using boost::multiprecision::abs;
    using boost::multiprecision::gcd;
    Int g = 0;
    for (const Int& x : gens) g = gcd(g, abs(x));
    return principal_ideal(ring, g);
}

/// inner included in outer: the generator of outer divides the generator of
/// inner, with 0 standing for the zero ideal (and, over Z/n, for the lift n).
inline bool ideal_contains(const Ring& ring, const PrincipalIdeal& outer,
                           const PrincipalIdeal& inner) {
    assert(ideal_valid(ring, outer) && ideal_valid(ring, inner));
    if (inner.gen == 0) return true;
    if (outer.gen == 0) return false;  // zero ideal contains only the zero ideal
    return inner.gen % outer.gen == 0;
}

inline PrincipalIdeal annihilator(const Ring& ring, const PrincipalIdeal& ideal) {
    if (ideal.is_zero()) return unit_ideal();
    if (ring.is_integers()) return zero_ideal();
    return principal_ideal(ring, ring.modulus() / ideal.gen);
}

/// Ascending list of divisors of n (n >= 1).
inline std::vector<Int> divisors(const Int& n) {
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// All ideals of the ring, ascending by generator. Finite rings only.
inline std::vector<PrincipalIdeal> all_ideals(const Ring& ring) {
    if (ring.is_integers())
        throw std::invalid_argument("all_ideals: the integers have infinitely many ideals");
    std::vector<PrincipalIdeal> out;
    out.push_back(zero_ideal());
    for (const Int& d : divisors(ring.modulus()))
        if (d != ring.modulus()) out.push_back(PrincipalIdeal{d});
    return out;
}

class Filter;

/// A decidable hereditary set of ideals: non-empty, closed under passing to
/// smaller ideals. K0 = {0}; K1 = ideals with non-trivial annihilator;
/// subset/strict-subset of a fixed ideal; or the set induced by a filter F
/// via I |-> ann(I) in F.
class HereditarySet {
public:
    enum class Kind { K0, K1, SubsetOf, StrictSubsetOf, FromFilter };

    static HereditarySet k0() { return HereditarySet(Kind::K0); }
    static HereditarySet k1() { return HereditarySet(Kind::K1); }
    static HereditarySet subset_of(PrincipalIdeal bound) {
        HereditarySet h(Kind::SubsetOf);
        h.bound_ = std::move(bound);
        return h;
    }
    static HereditarySet strict_subset_of(PrincipalIdeal bound) {
        if (bound.is_zero())
            throw std::invalid_argument("strict_subset_of: bound must contain a non-zero element");
        HereditarySet h(Kind::StrictSubsetOf);
        h.bound_ = std::move(bound);
        return h;
    }
    static HereditarySet from_filter(Filter f);

    Kind kind() const { return kind_; }
    const PrincipalIdeal& bound() const { return *bound_; }
    const Filter& filter() const { return *filter_; }

private:
    explicit HereditarySet(Kind k) : kind_(k) {}
    Kind kind_;
    std::optional<PrincipalIdeal> bound_;
    std::shared_ptr<const Filter> filter_;
};

/// A decidable filter of ideals: non-empty, closed under passing to larger
/// ideals. Superset/strict-superset of a fixed ideal; essential ideals; or
/// the filter induced by a hereditary set K via J |-> ann(J) in K.
class Filter {
public:
    enum class Kind { SupersetOf, StrictSupersetOf, Essential, FromHereditary };

    static Filter superset_of(PrincipalIdeal base) {
        Filter f(Kind::SupersetOf);
        f.base_ = std::move(base);
        return f;
    }
    static Filter strict_superset_of(PrincipalIdeal base) {
        if (base.gen == 1)
            throw std::invalid_argument(
                "strict_superset_of: base must differ from the whole ring");
        Filter f(Kind::StrictSupersetOf);
        f.base_ = std::move(base);
        return f;
    }
    static Filter essential() { return Filter(Kind::Essential); }
    static Filter from_hereditary(HereditarySet h) {
        Filter f(Kind::FromHereditary);
        f.hset_ = std::make_shared<const HereditarySet>(std::move(h));
        return f;
    }

    Kind kind() const { return kind_; }
    const PrincipalIdeal& base() const { return *base_; }
    const HereditarySet& hereditary() const { return *hset_; }

private:
    explicit Filter(Kind k) : kind_(k) {}
    Kind kind_;
    std::optional<PrincipalIdeal> base_;
    std::shared_ptr<const HereditarySet> hset_;
};

inline HereditarySet HereditarySet::from_filter(Filter f) {
    HereditarySet h(Kind::FromFilter);
    h.filter_ = std::make_shared<const Filter>(std::move(f));
    return h;
}

bool filter_contains(const Ring& ring, const Filter& filter, const PrincipalIdeal& ideal);

inline bool hset_contains(const Ring& ring, const HereditarySet& hset,
                          const PrincipalIdeal& ideal) {
    switch (hset.kind()) {
        case HereditarySet::Kind::K0:
            return ideal.is_zero();
        case HereditarySet::Kind::K1:
            return !annihilator(ring, ideal).is_zero();
        case HereditarySet::Kind::SubsetOf:
            return ideal_contains(ring, hset.bound(), ideal);
        case HereditarySet::Kind::StrictSubsetOf:
            return ideal_contains(ring, hset.bound(), ideal) && ideal != hset.bound();
        case HereditarySet::Kind::FromFilter:
            return filter_contains(ring, hset.filter(), annihilator(ring, ideal));
    }
    throw std::logic_error("hset_contains: bad kind");
}

/// J is essential iff J meets every non-zero ideal non-trivially. Over Z that
/// means J != (0); over Z/n it is checked by a scan over the divisor ideals,
/// using (a) cap (b) = (lcm(a, b)).
inline bool ideal_is_essential(const Ring& ring, const PrincipalIdeal& ideal) {
    using boost::multiprecision::lcm;
    if (ring.is_integers()) return !ideal.is_zero();
    const Int& n = ring.modulus();
    Int g = ideal.is_zero() ? n : ideal.gen;
    for (const Int& d : divisors(n)) {
        if (d == n) continue;  // the zero ideal
        if (lcm(g, d) == n) return false;
    }
    return true;
}

inline bool filter_contains(const Ring& ring, const Filter& filter,
                            const PrincipalIdeal& ideal) {
    switch (filter.kind()) {
        case Filter::Kind::SupersetOf:
            return ideal_contains(ring, ideal, filter.base());
        case Filter::Kind::StrictSupersetOf:
            return ideal_contains(ring, ideal, filter.base()) && ideal != filter.base();
        case Filter::Kind::Essential:
            return ideal_is_essential(ring, ideal);
        case Filter::Kind::FromHereditary:
            return hset_contains(ring, filter.hereditary(), annihilator(ring, ideal));
    }
    throw std::logic_error("filter_contains: bad kind");
}

/// Checks that every ideal referenced by the hereditary set is valid for the ring.
inline void validate_hset(const Ring& ring, const HereditarySet& hset);

inline void validate_filter(const Ring& ring, const Filter& filter) {
    switch (filter.kind()) {
        case Filter::Kind::SupersetOf:
        case Filter::Kind::StrictSupersetOf:
            if (!ideal_valid(ring, filter.base()))
                throw std::invalid_argument("filter: base ideal not valid for ring");
            break;
        case Filter::Kind::Essential:
            break;
        case Filter::Kind::FromHereditary:
            validate_hset(ring, filter.hereditary());
            break;
    }
}

inline void validate_hset(const Ring& ring, const HereditarySet& hset) {
    switch (hset.kind()) {
        case HereditarySet::Kind::K0:
        case HereditarySet::Kind::K1:
            break;
        case HereditarySet::Kind::SubsetOf:
        case HereditarySet::Kind::StrictSubsetOf:
            if (!ideal_valid(ring, hset.bound()))
                throw std::invalid_argument("hereditary set: bound ideal not valid for ring");
            break;
        case HereditarySet::Kind::FromFilter:
            validate_filter(ring, hset.filter());
            break;
    }
}

}  // namespace jumploci
