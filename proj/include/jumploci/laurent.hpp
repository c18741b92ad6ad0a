#pragma once

#include "jumploci/lattice.hpp"
#include "jumploci/ring.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace jumploci {

/// Point of Z^s. Entries are machine integers; the JSON layer bounds their
/// magnitude so that images under group homomorphisms stay exact.
using ExponentVector = std::vector<std::int64_t>;

/// Element of the group ring R[Z^s]: a finite map from exponent vectors to
/// nonzero canonical coefficients. Terms are kept in lexicographic order.
class LaurentPoly {
public:
    LaurentPoly(Ring ring, int ambient_rank)
        : ring_(std::move(ring)), ambient_rank_(ambient_rank) {
        if (ambient_rank < 0) throw std::invalid_argument("LaurentPoly: negative rank");
    }

    static LaurentPoly from_terms(const Ring& ring, int ambient_rank,
                                  const std::vector<std::pair<ExponentVector, Int>>& terms) {
        LaurentPoly f(ring, ambient_rank);
        for (const auto& [exp, coeff] : terms) f.add_term(exp, coeff);
        return f;
    }

    static LaurentPoly constant(const Ring& ring, int ambient_rank, const Int& value) {
        LaurentPoly f(ring, ambient_rank);
        f.add_term(ExponentVector(static_cast<std::size_t>(ambient_rank), 0), value);
        return f;
    }

    static LaurentPoly monomial(const Ring& ring, int ambient_rank, ExponentVector exp,
                                const Int& coeff) {
        LaurentPoly f(ring, ambient_rank);
        f.add_term(std::move(exp), coeff);
        return f;
    }

    const Ring& ring() const { return ring_; }
    int ambient_rank() const { return ambient_rank_; }
    const std::map<ExponentVector, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coefficient(const ExponentVector& exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(ExponentVector exp, const Int& coeff) {
        if (static_cast<int>(exp.size()) != ambient_rank_)
            throw std::invalid_argument("LaurentPoly: exponent length != ambient rank");
        auto [it, inserted] = terms_.emplace(std::move(exp), Int(0));
        it->second = ring_.add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }

    LaurentPoly& operator+=(const LaurentPoly& g) {
        check_compatible(g);
        for (const auto& [exp, coeff] : g.terms_) add_term(exp, coeff);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& g) {
        check_compatible(g);
        for (const auto& [exp, coeff] : g.terms_) add_term(exp, ring_.neg(coeff));
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly f, const LaurentPoly& g) { return f += g; }
    friend LaurentPoly operator-(LaurentPoly f, const LaurentPoly& g) { return f -= g; }

    friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
        f.check_compatible(g);
        LaurentPoly out(f.ring_, f.ambient_rank_);
        for (const auto& [ea, ca] : f.terms_)
            for (const auto& [eb, cb] : g.terms_) {
                ExponentVector e(ea.size());
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(std::move(e), f.ring_.mul(ca, cb));
            }
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out(ring_, ambient_rank_);
        for (const auto& [exp, coeff] : terms_) out.add_term(exp, ring_.neg(coeff));
        return out;
    }

    /// Scale by a ring constant.
    LaurentPoly scaled(const Int& c) const {
        LaurentPoly out(ring_, ambient_rank_);
        for (const auto& [exp, coeff] : terms_) out.add_term(exp, ring_.mul(coeff, c));
        return out;
    }

    bool operator==(const LaurentPoly& o) const {
        return ring_ == o.ring_ && ambient_rank_ == o.ambient_rank_ && terms_ == o.terms_;
    }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [exp, coeff] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << coeff << "*x^(";
            for (std::size_t i = 0; i < exp.size(); ++i) {
                if (i) os << ",";
                os << exp[i];
            }
            os << ")";
        }
        return os.str();
    }

private:
    void check_compatible(const LaurentPoly& g) const {
        if (ring_ != g.ring_) throw std::invalid_argument("LaurentPoly: ring mismatch");
        if (ambient_rank_ != g.ambient_rank_)
            throw std::invalid_argument("LaurentPoly: ambient rank mismatch");
    }

    Ring ring_;
    int ambient_rank_;
    std::map<ExponentVector, Int> terms_;
};

/// Union of the supports of a family of polynomials.
inline std::set<ExponentVector> support(const std::vector<LaurentPoly>& polys) {
    std::set<ExponentVector> out;
    for (const auto& f : polys)
        for (const auto& [exp, coeff] : f.terms()) out.insert(exp);
    return out;
}

/// Ideal of R generated by every coefficient of every listed polynomial.
inline PrincipalIdeal coefficient_ideal(const Ring& ring, const std::vector<LaurentPoly>& polys) {
    std::vector<Int> gens;
    for (const auto& f : polys) {
        if (f.ring() != ring) throw std::invalid_argument("coefficient_ideal: ring mismatch");
        for (const auto& [exp, coeff] : f.terms()) gens.push_back(coeff);
    }
    return ideal_from_generators(ring, gens);
}

inline bool is_k_set(const Ring& ring, const std::vector<LaurentPoly>& polys,
                     const HereditarySet& hset) {
    return hset_contains(ring, hset, coefficient_ideal(ring, polys));
}

/// Image of f under the ring homomorphism R[Z^s] -> R[Z^t] induced by p:
/// each term's exponent is pushed through p and colliding images are summed.
inline LaurentPoly induced_map(const GroupHom& p, const LaurentPoly& f) {
    if (p.cols != f.ambient_rank())
        throw std::invalid_argument("induced_map: homomorphism domain != polynomial rank");
    LaurentPoly out(f.ring(), p.rows);
    for (const auto& [exp, coeff] : f.terms()) out.add_term(p.apply(exp), coeff);
    return out;
}

inline std::vector<LaurentPoly> induced_map(const GroupHom& p,
                                            const std::vector<LaurentPoly>& polys) {
    std::vector<LaurentPoly> out;
    out.reserve(polys.size());
    for (const auto& f : polys) out.push_back(induced_map(p, f));
    return out;
}

/// Sum of all coefficients: the image of f under the zero homomorphism, read
/// off at the zero exponent.
inline Int augmentation(const LaurentPoly& f) {
    Int sum = 0;
    for (const auto& [exp, coeff] : f.terms()) sum = f.ring().add(sum, coeff);
    return sum;
}

}  // namespace jumploci
