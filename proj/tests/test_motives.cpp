#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "jinv/motives.hpp"
#include "jinv/profile_io.hpp"
#include "jinv/rootdata.hpp"
#include "oracles.hpp"

using jinv::BigInt;
using jinv::DynkinType;
using jinv::IntPoly;
using jinv::JInvariant;
using jinv::JProfile;
using jinv::Series;
using jinv::TwistMultiset;

namespace {

JInvariant conic_j() {
    const JProfile& a1 = jinv::bundled_profiles().find(DynkinType(Series::A, 1), 2);
    return jinv::make_j_invariant(a1, {1});
}

}  // namespace

TEST_CASE("motive of the split group is the Tate motive", "[motives]") {
    const JProfile& d4 = jinv::bundled_profiles().find(DynkinType(Series::D, 4), 2);
    CHECK(jinv::motive_poincare(jinv::make_j_invariant(d4, {0, 0, 0})) == IntPoly::one());
}

TEST_CASE("motive of an anisotropic conic", "[motives]") {
    CHECK(jinv::motive_poincare(conic_j()) == IntPoly{1, 1});
}

TEST_CASE("motive and truncated ring series coincide", "[motives]") {
    const JProfile& d4 = jinv::bundled_profiles().find(DynkinType(Series::D, 4), 2);
    for (std::vector<int> j : {std::vector<int>{2, 2, 1}, {1, 0, 1}, {0, 2, 0}}) {
        CHECK(jinv::motive_poincare(jinv::make_j_invariant(d4, j)) ==
              jinv::truncated_ring_poincare(d4, j));
    }
}

TEST_CASE("twist extraction", "[motives]") {
    // an indecomposable conic over a field where the quaternion algebra is division
    TwistMultiset conic = jinv::decompose(IntPoly{1, 1}, conic_j());
    CHECK(conic.counts == std::map<std::size_t, BigInt>{{0, 1}});

    // split case: multiset = coefficients of P_X
    JProfile flat = jinv::make_profile(std::nullopt, 2, {1, 1}, {1, 1});
    TwistMultiset split =
        jinv::decompose(IntPoly{1, 2, 2, 1}, jinv::make_j_invariant(flat, {0, 0}));
    CHECK(split.counts == std::map<std::size_t, BigInt>{{0, 1}, {1, 2}, {2, 2}, {3, 1}});

    // P^3 as the Severi-Brauer variety of a degree-4 algebra of index 2
    const JProfile& a3 = jinv::bundled_profiles().find(DynkinType(Series::A, 3), 2);
    JInvariant j = jinv::make_j_invariant(a3, {1});
    REQUIRE(jinv::motive_poincare(j) == IntPoly{1, 1});
    TwistMultiset sb = jinv::decompose(jinv::severi_brauer_poincare(4), j);
    CHECK(sb.counts == std::map<std::size_t, BigInt>{{0, 1}, {2, 1}});
}

TEST_CASE("inconsistent pairs are rejected", "[motives]") {
    CHECK_THROWS_AS(jinv::decompose(IntPoly{1, 1, 1}, conic_j()), jinv::NotDivisibleError);
    // (1 + t^3)/(1 + t) = 1 - t + t^2: divisible but not a twist multiset
    CHECK_THROWS_AS(jinv::decompose(IntPoly{1, 0, 0, 1}, conic_j()),
                    jinv::NegativeMultiplicityError);
}

TEST_CASE("admissible J-invariants", "[motives]") {
    const JProfile& a1 = jinv::bundled_profiles().find(DynkinType(Series::A, 1), 2);
    auto scan = jinv::admissible_j(IntPoly{1, 1}, a1);
    REQUIRE(scan.invariants.size() == 2);
    CHECK(scan.invariants[0].components == std::vector<int>{0});
    CHECK(scan.invariants[1].components == std::vector<int>{1});
    CHECK_FALSE(scan.truncated);

    const JProfile& d4 = jinv::bundled_profiles().find(DynkinType(Series::D, 4), 2);
    auto trivial = jinv::admissible_j(IntPoly::one(), d4);
    REQUIRE(trivial.invariants.size() == 1);
    CHECK(trivial.invariants[0].components == std::vector<int>{0, 0, 0});

    auto flag = jinv::admissible_j(jinv::flag_poincare(DynkinType(Series::D, 4)), d4);
    bool has_zero = false;
    for (const auto& inv : flag.invariants)
        if (inv.components == std::vector<int>{0, 0, 0}) has_zero = true;
    CHECK(has_zero);

    auto capped = jinv::admissible_j(jinv::flag_poincare(DynkinType(Series::D, 4)), d4, 5);
    CHECK(capped.truncated);
    CHECK(capped.scanned == 5);
}

TEST_CASE("reconstruction on random decompositions", "[motives]") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 120; ++trial) {
        JProfile profile = jinv::testing::random_profile(rng, 1 << 14);
        JInvariant j{profile, jinv::testing::random_tuple_below(rng, profile.bounds)};
        IntPoly motive = jinv::motive_poincare(j);

        CHECK(motive.is_palindromic());
        BigInt expect = 1;
        for (std::size_t i = 0; i < j.components.size(); ++i)
            expect *= jinv::checked_pow(static_cast<std::uint64_t>(profile.p), j.components[i]);
        CHECK(motive.eval(1) == expect);
        CHECK(motive == jinv::truncated_ring_poincare(profile, j.components));

        // build a variety polynomial out of known twists and recover them
        const int copies = std::uniform_int_distribution<int>(1, 6)(rng);
        IntPoly p_x;
        for (int c = 0; c < copies; ++c) {
            const int shift = std::uniform_int_distribution<int>(0, 3)(rng);
            p_x += IntPoly::monomial(static_cast<std::size_t>(shift)) * motive;
        }
        TwistMultiset twists = jinv::decompose(p_x, j);
        CHECK(twists.to_poly() * motive == p_x);
        CHECK(twists.total() == copies);
    }
}

TEST_CASE("componentwise monotonicity gives motive divisibility", "[motives]") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 80; ++trial) {
        JProfile profile = jinv::testing::random_profile(rng, 1 << 14);
        auto lo = jinv::testing::random_tuple_below(rng, profile.bounds);
        auto hi = lo;
        for (std::size_t i = 0; i < hi.size(); ++i)
            hi[i] += std::uniform_int_distribution<int>(0, profile.bounds[i] - lo[i])(rng);
        IntPoly small = jinv::motive_poincare(JInvariant{profile, lo});
        IntPoly large = jinv::motive_poincare(JInvariant{profile, hi});
        CHECK(jinv::exact_div(large, small) * small == large);
    }
}
