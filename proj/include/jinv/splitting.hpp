#pragma once

// The generic-splitting transform: how a J-invariant changes over the
// function field F_A of the Severi-Brauer variety of a Tits algebra A of
// degree n (reduced to a p-power). Components of degree > 1 never change;
// the degree-1 components obey the multiset identity
//
//     J^1(G) u {0} = J^1(G_{F_A}) u {j_{G,A}},
//
// and the whole transform is certified by the polynomial identity
//
//     (t^j - 1) prod_i (t^{d_i p^{j'_i}} - 1) = (t - 1) prod_i (t^{d_i p^{j_i}} - 1)
//
// with j = p^{j_{G,A}}, equivalently by
//
//     (t^n - 1)/(t - 1) = prod_i (t^{d_i p^{j_i}} - 1)/(t^{d_i p^{j'_i}} - 1) * F(t),
//
// where F(t) = (t^n - 1)/(t^j - 1) = 1 + t^j + t^{2j} + ...
//
// Note on "j": the multiset identity is consistent only if the removed
// codimension is the p-power p^{j_{G,A}}, not the exponent j_{G,A} itself;
// this module uses j = p^{j_{G,A}} throughout.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jinv/errors.hpp"
#include "jinv/jprofile.hpp"
#include "jinv/numeric.hpp"
#include "jinv/poly.hpp"

namespace jinv {

struct SplittingInput {
    JInvariant j;
    std::uint64_t tits_degree = 1;  // n = deg A, must be a power of the profile prime
    int j_ga = 0;                   // j_{G,A} >= 0, with p^{j_ga} | n
};

struct SplittingResult {
    std::vector<int> components_after;  // full r-tuple under the canonical assignment
    std::vector<int> degree_one_after;  // J^1(G_{F_A}) as a sorted multiset
    std::vector<int> higher_after;      // degree > 1 components, unchanged
    IntPoly f;                          // F(t)
};

// F(t) = (t^n - 1)/(t^{p^{j_ga}} - 1); F = 1 when p^{j_ga} = n.
inline IntPoly f_polynomial(std::uint64_t n, int j_ga, int p) {
    if (n == 0 || !is_power_of(n, static_cast<std::uint64_t>(p)))
        throw InvalidInputError("F polynomial: n = " + std::to_string(n) +
                                " is not a power of p = " + std::to_string(p));
    if (j_ga < 0) throw InvalidInputError("F polynomial: j_ga must be non-negative");
    const std::uint64_t q = checked_pow(static_cast<std::uint64_t>(p), j_ga);
    if (q > n || n % q != 0)
        throw InvalidInputError("F polynomial: p^{j_ga} = " + std::to_string(q) +
                                " does not divide n = " + std::to_string(n));
    return geom_quotient(n, q);
}

namespace detail {

inline void check_splitting_input(const SplittingInput& input) {
    const int p = input.j.profile.p;
    if (!is_power_of(input.tits_degree, static_cast<std::uint64_t>(p)))
        throw InvalidInputError("splitting: the algebra degree n = " +
                                std::to_string(input.tits_degree) + " is not a power of p = " +
                                std::to_string(p) +
                                "; reduce to the p-primary part first");
    if (input.j_ga < 0) throw InvalidInputError("splitting: j_ga must be non-negative");
    const std::uint64_t q = checked_pow(static_cast<std::uint64_t>(p), input.j_ga);
    if (q > input.tits_degree || input.tits_degree % q != 0)
        throw InvalidInputError("splitting: p^{j_ga} must divide n");
}

}  // namespace detail

// Applies the transform. The multiset statement leaves the indexed output
// underdetermined when several degree-1 slots share a value; the canonical
// assignment used here zeroes the first degree-1 slot whose value equals
// j_ga and keeps every other slot unchanged.
inline SplittingResult split_transform(const SplittingInput& input) {
    detail::check_splitting_input(input);
    const JProfile& profile = input.j.profile;
    const int l = profile.degree_one_count();

    SplittingResult result;
    result.components_after = input.j.components;
    if (input.j_ga != 0) {
        int slot = -1;
        for (int i = 0; i < l; ++i)
            if (input.j.components[i] == input.j_ga) {
                slot = i;
                break;
            }
        if (slot < 0)
            throw InconsistentInputError(
                "splitting: j_ga = " + std::to_string(input.j_ga) +
                " is not an element of J^1(G) u {0}; the multiset identity has no solution");
        result.components_after[slot] = 0;
    }
    result.degree_one_after.assign(result.components_after.begin(),
                                   result.components_after.begin() + l);
    std::sort(result.degree_one_after.begin(), result.degree_one_after.end());
    result.higher_after.assign(input.j.components.begin() + l, input.j.components.end());
    result.f = f_polynomial(input.tits_degree, input.j_ga, profile.p);
    return result;
}

struct IdentityCheck {
    bool ok = false;
    std::string detail;  // names the failing form when ok is false
    IntPoly lhs;
    IntPoly rhs;
};

// Certifies a (before, after) pair of component tuples against both forms of
// the splitting identity. Returns the two sides of the first failing form.
inline IdentityCheck verify_identity(const JInvariant& before, const std::vector<int>& after,
                                     std::uint64_t n, int j_ga) {
    const JProfile& profile = before.profile;
    if (after.size() != static_cast<std::size_t>(profile.r))
        throw InvalidInputError("verify_identity: component tuples must share the profile");
    for (int ji : after)
        if (ji < 0) throw InvalidInputError("verify_identity: components must be non-negative");

    const std::uint64_t p = static_cast<std::uint64_t>(profile.p);
    const std::uint64_t j = checked_pow(p, j_ga);

    IdentityCheck check;

    // (t^j - 1) prod (t^{d_i p^{j'_i}} - 1)  ==  (t - 1) prod (t^{d_i p^{j_i}} - 1)
    IntPoly lhs = IntPoly::power_minus_one(j);
    IntPoly rhs = IntPoly::power_minus_one(1);
    for (int i = 0; i < profile.r; ++i) {
        const std::uint64_t d = static_cast<std::uint64_t>(profile.degrees[i]);
        lhs *= IntPoly::power_minus_one(d * checked_pow(p, after[i]));
        rhs *= IntPoly::power_minus_one(d * checked_pow(p, before.components[i]));
    }
    if (lhs != rhs) {
        check.detail = "product identity fails";
        check.lhs = std::move(lhs);
        check.rhs = std::move(rhs);
        return check;
    }

    // Equivalent quotient form, checked when the componentwise divisions are
    // exact (j'_i <= j_i) and n, j_ga are a valid F-polynomial pair.
    const bool divisions_exact = [&] {
        for (int i = 0; i < profile.r; ++i)
            if (after[i] > before.components[i]) return false;
        return true;
    }();
    if (divisions_exact && is_power_of(n, p) && j <= n && n % j == 0) {
        IntPoly product = f_polynomial(n, j_ga, profile.p);
        for (int i = 0; i < profile.r; ++i) {
            const std::uint64_t d = static_cast<std::uint64_t>(profile.degrees[i]);
            product *= exact_div(IntPoly::power_minus_one(d * checked_pow(p, before.components[i])),
                                 IntPoly::power_minus_one(d * checked_pow(p, after[i])));
        }
        IntPoly expected = geom_quotient(n, 1);
        if (product != expected) {
            check.detail = "quotient identity fails";
            check.lhs = std::move(expected);
            check.rhs = std::move(product);
            return check;
        }
    }

    check.ok = true;
    return check;
}

}  // namespace jinv
