#pragma once

// Type-D_n calculator for degree-2n algebras with orthogonal involution and
// trivial discriminant (adjoint groups PGO+ at p = 2). Everything is phrased
// in 2-adic valuations of the indices of A and of the two Clifford
// components C+, C-:
//
//     j_1 = min{ k_1, i_A, max{i_+, i_-} },     k_1 = v_2(n),
//
// with the half-spin specialization j_1 = min{k_1, i_A} when a Clifford
// component is split, the conditional second component
//
//     j_2 = min{i_+, i_-}   whenever   min{i_+, i_-} < min{k_1, i_A},
//
// and the index reduction exponents v_2(ind A_{F(X+-)}) = min{k_1, i_A, i_-+}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jinv/errors.hpp"
#include "jinv/jprofile.hpp"
#include "jinv/numeric.hpp"
#include "jinv/splitting.hpp"

namespace jinv {

struct InvolutionData {
    std::uint64_t n = 1;  // the algebra A has degree 2n
    int i_a = 0;          // v_2(ind A)
    int i_plus = 0;       // v_2(ind C+)
    int i_minus = 0;      // v_2(ind C-)
};

inline int k1(const InvolutionData& data) { return v2(data.n); }

// Index-level consequences of the fundamental Brauer relations. For even n
// the sum relation [A] + [C+] + [C-] = 0 pins ind A whenever a Clifford
// component splits: [C+-] = 0 forces [A] = [C-+], hence i_A = i_-+ (and the
// both-split case forces a split A). Deeper Brauer consistency is not
// modelled; inputs outside these checks are accepted as supplied.
inline std::vector<std::string> validate(const InvolutionData& data) {
    std::vector<std::string> violations;
    if (data.n == 0) {
        violations.push_back("n must be positive");
        return violations;
    }
    if (data.i_a < 0 || data.i_plus < 0 || data.i_minus < 0)
        violations.push_back("index valuations must be non-negative");
    if (data.i_a > k1(data) + 1)
        violations.push_back("ind A = 2^" + std::to_string(data.i_a) +
                             " exceeds deg A = 2n (i_A <= v_2(n) + 1)");
    if (data.n % 2 == 0 && std::min(data.i_plus, data.i_minus) == 0 &&
        data.i_a != std::max(data.i_plus, data.i_minus))
        violations.push_back(
            "a split Clifford component forces [A] = [C_other]: expected i_A = " +
            std::to_string(std::max(data.i_plus, data.i_minus)) + ", got " +
            std::to_string(data.i_a));
    return violations;
}

namespace detail {

inline void require_valid(const InvolutionData& data) {
    auto violations = validate(data);
    if (!violations.empty()) {
        std::string msg = "involution data fails the fundamental relations:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw InvalidDataError(msg, std::move(violations));
    }
}

}  // namespace detail

inline int j1(const InvolutionData& data) {
    detail::require_valid(data);
    return std::min({k1(data), data.i_a, std::max(data.i_plus, data.i_minus)});
}

// Half-spin case: one Clifford component split. Agrees with the general
// formula on all data passing validate().
inline int j1_halfspin(const InvolutionData& data) {
    if (data.i_plus != 0 && data.i_minus != 0)
        throw NotHalfSpinError("half-spin formula needs a split Clifford component");
    const int general = j1(data);
    const int halfspin = std::min(k1(data), data.i_a);
    if (general != halfspin)
        throw InvalidDataError("half-spin formula disagrees with the general one", {});
    return halfspin;
}

struct J2Result {
    // When the guard min{i_+, i_-} < min{k_1, i_A} fails, no formula is
    // available and only the upper bound is reported.
    std::optional<int> value;
    int upper_bound = 0;  // j_2 <= min{i_+, i_-} in all cases

    bool determined() const { return value.has_value(); }
};

inline J2Result j2(const InvolutionData& data) {
    J2Result result;
    result.upper_bound = std::min(data.i_plus, data.i_minus);
    if (result.upper_bound < std::min(k1(data), data.i_a)) result.value = result.upper_bound;
    return result;
}

enum class CliffordComponent { Plus, Minus };

// v_2(ind A) over the function field of the component variety X^+ or X^-.
inline int index_reduction_exponent(const InvolutionData& data, CliffordComponent component) {
    const int other = component == CliffordComponent::Plus ? data.i_minus : data.i_plus;
    return std::min({k1(data), data.i_a, other});
}

// Generic splitting of the Tits algebra A: the first component drops to 0,
// the tail is unchanged. Delegates to the splitting transform with
// j_{G,A} = j_1 and the 2-primary part of deg A = 2n, and insists the two
// routes agree.
inline JInvariant split_over_fa(const InvolutionData& data, const JInvariant& j) {
    if (!j.profile.type || j.profile.type->series != Series::D ||
        j.profile.type->rank != static_cast<int>(data.n) || j.profile.p != 2)
        throw InvalidInputError("split_over_fa: J-invariant must sit on the D" +
                                std::to_string(data.n) + " profile at p = 2");
    const int expected_j1 = j1(data);
    if (j.components.empty() || j.components[0] != expected_j1)
        throw InconsistentInputError("split_over_fa: first component " +
                                     std::to_string(j.components.empty() ? -1 : j.components[0]) +
                                     " differs from j_1 = " + std::to_string(expected_j1));

    SplittingInput input;
    input.j = j;
    input.tits_degree = p_primary_part(2 * data.n, 2);
    input.j_ga = expected_j1;
    SplittingResult transformed = split_transform(input);

    std::vector<int> expected = j.components;
    expected[0] = 0;
    if (transformed.components_after != expected)
        throw InconsistentInputError(
            "split_over_fa: splitting transform disagrees with the type-D reduction");
    return JInvariant{j.profile, std::move(expected)};
}

}  // namespace jinv
