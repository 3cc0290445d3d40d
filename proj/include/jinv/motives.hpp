#pragma once

// Poincare polynomial of the indecomposable upper motive attached to a
// J-invariant,
//
//     P(R_p(G), t) = prod_i (1 - t^{d_i p^{j_i}}) / (1 - t^{d_i}),
//
// and extraction of the twist multiset I from the decomposition
// M(X) = (+)_{i in I} R_p(G)(i) of a generically split variety: the quotient
// P(X, t) / P(R_p(G), t) must be a polynomial with non-negative coefficients,
// and its coefficients are the twist multiplicities.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "jinv/errors.hpp"
#include "jinv/jprofile.hpp"
#include "jinv/poly.hpp"

namespace jinv {

struct TwistMultiset {
    std::map<std::size_t, BigInt> counts;  // shift -> multiplicity, all > 0

    IntPoly to_poly() const {
        IntPoly p;
        for (const auto& [shift, mult] : counts) p += IntPoly::monomial(shift, mult);
        return p;
    }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [shift, mult] : counts) t += mult;
        return t;
    }

    bool operator==(const TwistMultiset&) const = default;
};

inline IntPoly motive_poincare(const JInvariant& j) {
    return truncated_ring_poincare(j.profile, j.components);
}

inline TwistMultiset decompose(const IntPoly& p_x, const JInvariant& j) {
    IntPoly quotient = exact_div(p_x, motive_poincare(j));
    TwistMultiset twists;
    for (std::size_t i = 0; i < quotient.coeffs().size(); ++i) {
        const BigInt& a = quotient.coeffs()[i];
        if (a < 0)
            throw NegativeMultiplicityError(
                "decompose: quotient has a negative coefficient at t^" + std::to_string(i),
                quotient.to_string());
        if (a > 0) twists.counts.emplace(i, a);
    }
    return twists;
}

struct AdmissibleResult {
    std::vector<JInvariant> invariants;  // lexicographically ascending
    bool truncated = false;              // candidate scan hit the cap
    std::size_t scanned = 0;
};

// Exhaustive scan of all tuples 0 <= j_i <= k_i for which decompose succeeds.
inline AdmissibleResult admissible_j(const IntPoly& p_x, const JProfile& profile,
                                     std::size_t cap = 1'000'000) {
    AdmissibleResult result;
    std::vector<int> j(static_cast<std::size_t>(profile.r), 0);
    for (;;) {
        ++result.scanned;
        try {
            JInvariant cand{profile, j};
            decompose(p_x, cand);
            result.invariants.push_back(std::move(cand));
        } catch (const NotDivisibleError&) {
        } catch (const NegativeMultiplicityError&) {
        }
        // odometer, last index fastest: lexicographic order
        int i = profile.r - 1;
        while (i >= 0 && j[i] == profile.bounds[i]) j[i--] = 0;
        if (i < 0) break;
        ++j[i];
        if (result.scanned >= cap) {
            result.truncated = true;
            break;
        }
    }
    return result;
}

}  // namespace jinv
