#pragma once

// Profiles (r, d_i, k_i) of the truncated polynomial invariant per
// (Dynkin type, prime), the graded dimension series of the truncated ring
//
//     F_p[e_1, ..., e_r] / (e_1^{p^{k_1}}, ..., e_r^{p^{k_r}}),
//
// and the well-ordering of its monomials. Profiles are data, not code: the
// registry ingests a document and hard-validates only the type-D (p = 2)
// entries, whose shape is pinned:
//
//     r = m + 1  (n = 2m or 2m + 1),   d_1 = 1,  d_i = 2i - 3 for i >= 2,
//     k_1 = v_2(n).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "jinv/errors.hpp"
#include "jinv/numeric.hpp"
#include "jinv/poly.hpp"
#include "jinv/rootdata.hpp"

namespace jinv {

struct JProfile {
    // Registry entries always carry a type; ad hoc profiles (e.g. handed to
    // the splitting transform as bare degree lists) may not.
    std::optional<DynkinType> type;
    int p = 2;
    int r = 0;
    std::vector<int> degrees;  // d_1 <= ... <= d_r, each coprime to p
    std::vector<int> bounds;   // k_1, ..., k_r, each >= 0

    // Number of degree-1 components; degrees are sorted, so they form a prefix.
    int degree_one_count() const {
        int l = 0;
        while (l < r && degrees[l] == 1) ++l;
        return l;
    }
};

// Value-level checks on a profile entry. Structural problems (sizes that do
// not match r) are SchemaErrors; violated invariants are ConsistencyErrors.
inline void check_profile(const JProfile& pr) {
    if (pr.r < 0) throw SchemaError("profile: r must be non-negative");
    if (pr.degrees.size() != static_cast<std::size_t>(pr.r))
        throw SchemaError("profile: degrees list must have length r");
    if (pr.bounds.size() != static_cast<std::size_t>(pr.r))
        throw SchemaError("profile: bounds list must have length r");
    if (!is_prime(static_cast<std::uint64_t>(pr.p)))
        throw ConsistencyError("profile: p = " + std::to_string(pr.p) + " is not prime");
    for (int i = 0; i < pr.r; ++i) {
        if (pr.degrees[i] < 1)
            throw ConsistencyError("profile: degrees must be positive");
        if (i > 0 && pr.degrees[i - 1] > pr.degrees[i])
            throw ConsistencyError("profile: degrees must be nondecreasing");
        if (pr.degrees[i] % pr.p == 0)
            throw ConsistencyError("profile: degree d_" + std::to_string(i + 1) +
                                   " = " + std::to_string(pr.degrees[i]) +
                                   " is not coprime to p = " + std::to_string(pr.p));
        if (pr.bounds[i] < 0)
            throw ConsistencyError("profile: bounds must be non-negative");
    }
    if (pr.type && pr.type->series == Series::D && pr.p == 2) {
        const int n = pr.type->rank;
        const int m = n / 2;
        if (pr.r != m + 1)
            throw ConsistencyError("profile D" + std::to_string(n) +
                                   ": r must equal m + 1 = " + std::to_string(m + 1));
        for (int i = 0; i < pr.r; ++i) {
            const int expected = i == 0 ? 1 : 2 * (i + 1) - 3;
            if (pr.degrees[i] != expected)
                throw ConsistencyError("profile D" + std::to_string(n) + ": degree d_" +
                                       std::to_string(i + 1) + " must be " +
                                       std::to_string(expected));
        }
        if (pr.bounds[0] != v2(static_cast<std::uint64_t>(n)))
            throw ConsistencyError("profile D" + std::to_string(n) +
                                   ": k_1 must equal v_2(n) = " +
                                   std::to_string(v2(static_cast<std::uint64_t>(n))));
    }
}

inline JProfile make_profile(std::optional<DynkinType> type, int p, std::vector<int> degrees,
                             std::vector<int> bounds) {
    JProfile pr;
    pr.type = type;
    pr.p = p;
    pr.r = static_cast<int>(degrees.size());
    pr.degrees = std::move(degrees);
    pr.bounds = std::move(bounds);
    check_profile(pr);
    return pr;
}

struct JInvariant {
    JProfile profile;
    std::vector<int> components;  // 0 <= j_i <= k_i
};

inline JInvariant make_j_invariant(JProfile profile, std::vector<int> components) {
    if (components.size() != static_cast<std::size_t>(profile.r))
        throw InvalidInputError("J-invariant: expected " + std::to_string(profile.r) +
                                " components, got " + std::to_string(components.size()));
    for (int i = 0; i < profile.r; ++i)
        if (components[i] < 0 || components[i] > profile.bounds[i])
            throw InvalidInputError("J-invariant: component j_" + std::to_string(i + 1) +
                                    " = " + std::to_string(components[i]) +
                                    " outside [0, " + std::to_string(profile.bounds[i]) + "]");
    return JInvariant{std::move(profile), std::move(components)};
}

// Graded dimension series of the truncated ring with truncation exponents
// p^{j_i}: the degree-m coefficient counts tuples (m_1, ..., m_r) with
// 0 <= m_i < p^{j_i} and sum d_i m_i = m.
inline IntPoly truncated_ring_poincare(const JProfile& profile, const std::vector<int>& exps) {
    if (exps.size() != static_cast<std::size_t>(profile.r))
        throw LengthMismatchError("truncated_ring_poincare: exponent tuple has wrong length");
    IntPoly result = IntPoly::one();
    for (int i = 0; i < profile.r; ++i) {
        if (exps[i] < 0)
            throw InvalidInputError("truncated_ring_poincare: exponents must be non-negative");
        const std::uint64_t d = static_cast<std::uint64_t>(profile.degrees[i]);
        const std::uint64_t q = checked_pow(static_cast<std::uint64_t>(profile.p), exps[i]);
        result *= geom_quotient(d * q, d);
    }
    return result;
}

struct Monomial {
    std::vector<long long> exponents;
};

inline long long monomial_codim(const Monomial& m, const JProfile& profile) {
    if (m.exponents.size() != static_cast<std::size_t>(profile.r))
        throw LengthMismatchError("monomial: tuple length does not match profile rank r");
    long long sum = 0;
    for (int i = 0; i < profile.r; ++i) sum += profile.degrees[i] * m.exponents[i];
    return sum;
}

// The well-ordering on monomials: first by codimension |M| = sum d_i m_i,
// then by the entry at the greatest index where the tuples differ.
inline std::strong_ordering monomial_compare(const Monomial& m, const Monomial& n,
                                             const JProfile& profile) {
    const long long cm = monomial_codim(m, profile);
    const long long cn = monomial_codim(n, profile);
    if (cm != cn) return cm <=> cn;
    for (int i = profile.r; i-- > 0;)
        if (m.exponents[i] != n.exponents[i]) return m.exponents[i] <=> n.exponents[i];
    return std::strong_ordering::equal;
}

class ProfileRegistry {
public:
    using Key = std::tuple<char, int, int>;  // (series, rank, p)

    void insert(JProfile profile) {
        if (!profile.type) throw SchemaError("registry entries must carry a Dynkin type");
        Key key{static_cast<char>(profile.type->series), profile.type->rank, profile.p};
        const std::string where = profile.type->name() + " at p = " + std::to_string(profile.p);
        if (!entries_.emplace(key, std::move(profile)).second)
            throw ConsistencyError("duplicate profile entry for " + where);
    }

    bool contains(const DynkinType& type, int p) const {
        return entries_.count({static_cast<char>(type.series), type.rank, p}) > 0;
    }

    const JProfile& find(const DynkinType& type, int p) const {
        auto it = entries_.find({static_cast<char>(type.series), type.rank, p});
        if (it == entries_.end())
            throw InvalidInputError("no profile for " + type.name() + " at p = " +
                                    std::to_string(p));
        return it->second;
    }

    const std::map<Key, JProfile>& entries() const { return entries_; }

private:
    std::map<Key, JProfile> entries_;
};

}  // namespace jinv
