#pragma once

#include "jumploci/complex.hpp"
#include "jumploci/lattice.hpp"
#include "jumploci/laurent.hpp"
#include "jumploci/locus.hpp"
#include "jumploci/matrix.hpp"
#include "jumploci/ring.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace jumploci {

using json = nlohmann::ordered_json;

// input sanity bounds; keep exponent images of group homomorphisms inside int64
inline constexpr std::int64_t kMaxEntryMagnitude = 1'000'000;
inline constexpr int kMaxDimension = 64;

namespace detail {

inline const json& require_field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw std::invalid_argument(std::string("missing field \"") + name + "\"");
    return *it;
}

inline std::int64_t small_int(const json& j, const char* what, std::int64_t lo,
                              std::int64_t hi) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer");
    const std::int64_t v = j.get<std::int64_t>();
    if (v < lo || v > hi)
        throw std::invalid_argument(std::string(what) + ": value out of range");
    return v;
}

}  // namespace detail

inline json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

inline Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) throw std::invalid_argument("integer: empty string");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw std::invalid_argument("integer: sign without digits");
        for (std::size_t i = start; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("integer: bad character in \"" + s + "\"");
        return Int(s);
    }
    throw std::invalid_argument("integer: expected a number or a decimal string");
}

inline json ring_to_json(const Ring& ring) {
    if (ring.is_integers()) return json{{"kind", "Z"}};
    return json{{"kind", "Zmod"}, {"n", int_to_json(ring.modulus())}};
}

inline Ring ring_from_json(const json& j) {
    const std::string kind = detail::require_field(j, "kind").get<std::string>();
    if (kind == "Z") return Ring::integers();
    if (kind == "Zmod") return Ring::integers_mod(int_from_json(detail::require_field(j, "n")));
    throw std::invalid_argument("ring: unknown kind \"" + kind + "\"");
}

inline json ideal_to_json(const PrincipalIdeal& ideal) {
    return json{{"gen", int_to_json(ideal.gen)}};
}

inline PrincipalIdeal ideal_from_json(const Ring& ring, const json& j) {
    PrincipalIdeal ideal{int_from_json(detail::require_field(j, "gen"))};
    if (!ideal_valid(ring, ideal))
        throw std::invalid_argument("ideal: generator not valid for the ring");
    return ideal;
}

json filter_to_json(const Filter& filter);
Filter filter_from_json(const Ring& ring, const json& j);

inline json hset_to_json(const HereditarySet& hset) {
    switch (hset.kind()) {
        case HereditarySet::Kind::K0:
            return json{{"kind", "K0"}};
        case HereditarySet::Kind::K1:
            return json{{"kind", "K1"}};
        case HereditarySet::Kind::SubsetOf:
            return json{{"kind", "subset_of"}, {"gen", int_to_json(hset.bound().gen)}};
        case HereditarySet::Kind::StrictSubsetOf:
            return json{{"kind", "strict_subset_of"}, {"gen", int_to_json(hset.bound().gen)}};
        case HereditarySet::Kind::FromFilter:
            return json{{"kind", "from_filter"}, {"filter", filter_to_json(hset.filter())}};
    }
    throw std::logic_error("hset_to_json: bad kind");
}

inline HereditarySet hset_from_json(const Ring& ring, const json& j) {
    const std::string kind = detail::require_field(j, "kind").get<std::string>();
    if (kind == "K0") return HereditarySet::k0();
    if (kind == "K1") return HereditarySet::k1();
    if (kind == "subset_of") return HereditarySet::subset_of(ideal_from_json(ring, j));
    if (kind == "strict_subset_of")
        return HereditarySet::strict_subset_of(ideal_from_json(ring, j));
    if (kind == "from_filter")
        return HereditarySet::from_filter(
            filter_from_json(ring, detail::require_field(j, "filter")));
    throw std::invalid_argument("hereditary set: unknown kind \"" + kind + "\"");
}

inline json filter_to_json(const Filter& filter) {
    switch (filter.kind()) {
        case Filter::Kind::SupersetOf:
            return json{{"kind", "superset_of"}, {"gen", int_to_json(filter.base().gen)}};
        case Filter::Kind::StrictSupersetOf:
            return json{{"kind", "strict_superset_of"}, {"gen", int_to_json(filter.base().gen)}};
        case Filter::Kind::Essential:
            return json{{"kind", "essential"}};
        case Filter::Kind::FromHereditary:
            return json{{"kind", "from_hereditary"}, {"hset", hset_to_json(filter.hereditary())}};
    }
    throw std::logic_error("filter_to_json: bad kind");
}

inline Filter filter_from_json(const Ring& ring, const json& j) {
    const std::string kind = detail::require_field(j, "kind").get<std::string>();
    if (kind == "superset_of") return Filter::superset_of(ideal_from_json(ring, j));
    if (kind == "strict_superset_of")
        return Filter::strict_superset_of(ideal_from_json(ring, j));
    if (kind == "essential") return Filter::essential();
    if (kind == "from_hereditary")
        return Filter::from_hereditary(hset_from_json(ring, detail::require_field(j, "hset")));
    throw std::invalid_argument("filter: unknown kind \"" + kind + "\"");
}

inline json laurent_to_json(const LaurentPoly& f) {
    json terms = json::array();
    for (const auto& [exp, coeff] : f.terms()) {
        json e = json::array();
        for (std::int64_t x : exp) e.push_back(x);
        terms.push_back(json{{"exp", std::move(e)}, {"coeff", int_to_json(coeff)}});
    }
    return json{{"rank", f.ambient_rank()}, {"terms", std::move(terms)}};
}

inline LaurentPoly laurent_from_json(const Ring& ring, const json& j) {
    const int rank = static_cast<int>(
        detail::small_int(detail::require_field(j, "rank"), "polynomial rank", 0, kMaxDimension));
    LaurentPoly f(ring, rank);
    for (const json& term : detail::require_field(j, "terms")) {
        const json& je = detail::require_field(term, "exp");
        if (!je.is_array() || static_cast<int>(je.size()) != rank)
            throw std::invalid_argument("polynomial term: exponent length != rank");
        ExponentVector exp;
        exp.reserve(je.size());
        for (const json& x : je)
            exp.push_back(detail::small_int(x, "exponent entry", -kMaxEntryMagnitude,
                                            kMaxEntryMagnitude));
        f.add_term(std::move(exp), int_from_json(detail::require_field(term, "coeff")));
    }
    return f;
}

inline json hom_to_json(const GroupHom& p) {
    json m = json::array();
    for (const auto& row : p.matrix) {
        json r = json::array();
        for (std::int64_t x : row) r.push_back(x);
        m.push_back(std::move(r));
    }
    return json{{"t", p.rows}, {"s", p.cols}, {"matrix", std::move(m)}};
}

inline GroupHom hom_from_json(const json& j) {
    const int t = static_cast<int>(
        detail::small_int(detail::require_field(j, "t"), "t", 0, kMaxDimension));
    const int s = static_cast<int>(
        detail::small_int(detail::require_field(j, "s"), "s", 0, kMaxDimension));
    GroupHom p = GroupHom::zero(t, s);
    const json& m = detail::require_field(j, "matrix");
    if (!m.is_array() || static_cast<int>(m.size()) != t)
        throw std::invalid_argument("homomorphism: matrix must have t rows");
    for (int i = 0; i < t; ++i) {
        if (!m[i].is_array() || static_cast<int>(m[i].size()) != s)
            throw std::invalid_argument("homomorphism: matrix row length != s");
        for (int c = 0; c < s; ++c)
            p.matrix[i][c] = detail::small_int(m[i][c], "homomorphism entry",
                                               -kMaxEntryMagnitude, kMaxEntryMagnitude);
    }
    return p;
}

inline json sublattice_to_json(const Sublattice& lat) {
    json basis = json::array();
    for (const auto& row : lat.basis()) {
        json r = json::array();
        for (const Int& x : row) r.push_back(int_to_json(x));
        basis.push_back(std::move(r));
    }
    return json{{"s", lat.ambient_rank()}, {"basis", std::move(basis)}};
}

inline Sublattice sublattice_from_json(const json& j) {
    const int s = static_cast<int>(
        detail::small_int(detail::require_field(j, "s"), "s", 0, kMaxDimension));
    IntMat rows;
    for (const json& jr : detail::require_field(j, "basis")) {
        std::vector<Int> row;
        for (const json& x : jr) row.push_back(int_from_json(x));
        if (static_cast<int>(row.size()) != s)
            throw std::invalid_argument("sublattice: basis row length != s");
        rows.push_back(std::move(row));
    }
    return Sublattice::from_rows(s, std::move(rows));
}

inline json matrix_to_json(const PolyMatrix& a) {
    json rows = json::array();
    for (int i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(laurent_to_json(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", a.rows()},
                {"cols", a.cols()},
                {"s", a.ambient_rank()},
                {"entries", std::move(rows)}};
}

inline PolyMatrix matrix_from_json(const Ring& ring, const json& j) {
    const json& entries = detail::require_field(j, "entries");
    if (!entries.is_array()) throw std::invalid_argument("matrix: entries must be an array");
    std::vector<std::vector<LaurentPoly>> rows;
    for (const json& jr : entries) {
        std::vector<LaurentPoly> row;
        for (const json& je : jr) row.push_back(laurent_from_json(ring, je));
        rows.push_back(std::move(row));
    }
    int m = static_cast<int>(rows.size());
    int n = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    if (auto it = j.find("rows"); it != j.end())
        m = static_cast<int>(detail::small_int(*it, "rows", 0, 1 << 10));
    if (auto it = j.find("cols"); it != j.end())
        n = static_cast<int>(detail::small_int(*it, "cols", 0, 1 << 10));
    if (m * n > 0 || !rows.empty()) {
        if (static_cast<int>(rows.size()) != m)
            throw std::invalid_argument("matrix: declared row count mismatch");
        for (const auto& row : rows)
            if (static_cast<int>(row.size()) != n)
                throw std::invalid_argument("matrix: declared column count mismatch");
    }
    int ambient = -1;
    for (const auto& row : rows)
        for (const auto& f : row) ambient = f.ambient_rank();
    if (auto it = j.find("s"); it != j.end())
        ambient = static_cast<int>(detail::small_int(*it, "s", 0, kMaxDimension));
    if (ambient < 0) ambient = 0;
    PolyMatrix a(ring, ambient, m, n);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int c = 0; c < static_cast<int>(rows[i].size()); ++c)
            a.set(i, c, std::move(rows[i][c]));
    return a;
}

inline json complex_to_json(const ChainComplex& c) {
    json diffs = json::array();
    for (const auto& d : c.differentials()) diffs.push_back(matrix_to_json(d));
    return json{{"lowest_index", c.lowest_index()},
                {"ranks", c.ranks()},
                {"s", c.ambient_rank()},
                {"differentials", std::move(diffs)}};
}

inline ChainComplex complex_from_json(const Ring& ring, const json& j) {
    const int lowest = static_cast<int>(detail::small_int(
        detail::require_field(j, "lowest_index"), "lowest_index", -(1 << 20), 1 << 20));
    std::vector<int> ranks;
    for (const json& r : detail::require_field(j, "ranks"))
        ranks.push_back(static_cast<int>(detail::small_int(r, "module rank", 0, 1 << 10)));
    std::vector<PolyMatrix> diffs;
    for (const json& jd : detail::require_field(j, "differentials"))
        diffs.push_back(matrix_from_json(ring, jd));
    int ambient = -1;
    for (const auto& d : diffs) ambient = d.ambient_rank();
    if (auto it = j.find("s"); it != j.end())
        ambient = static_cast<int>(detail::small_int(*it, "s", 0, kMaxDimension));
    if (ambient < 0) ambient = 0;
    return ChainComplex(ring, ambient, lowest, std::move(ranks), std::move(diffs));
}

inline json locus_to_json(const JumpLocus& locus) {
    json groups = json::array();
    for (const auto& g : locus.groups) {
        json jg = sublattice_to_json(g.group);
        jg["proper"] = g.proper;
        groups.push_back(std::move(jg));
    }
    return json{{"s", locus.ambient_rank},
                {"ell", locus.groups.size()},
                {"groups", std::move(groups)}};
}

inline json report_to_json(const VerificationReport& report) {
    json out{{"t", report.t},
             {"box", report.box},
             {"checked", report.checked},
             {"disagreements", report.disagreements}};
    if (report.first_counterexample) {
        const auto& cex = *report.first_counterexample;
        out["counterexample"] = json{{"p", hom_to_json(cex.hom)},
                                     {"in_locus", cex.in_locus},
                                     {"oracle", cex.oracle}};
    }
    return out;
}

}  // namespace jumploci
