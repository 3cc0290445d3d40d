#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "jinv/jprofile.hpp"
#include "jinv/profile_io.hpp"
#include "oracles.hpp"

using jinv::DynkinType;
using jinv::IntPoly;
using jinv::JProfile;
using jinv::Monomial;
using jinv::Series;

namespace {

JProfile d113(int p = 2) {
    return jinv::make_profile(std::nullopt, p, {1, 1, 3}, {3, 3, 3});
}

}  // namespace

TEST_CASE("document ingestion accepts well-formed entries", "[jprofile]") {
    auto reg = jinv::registry_from_json_text(R"([
      {"series": "D", "rank": 4, "p": 2, "r": 3, "degrees": [1,1,3], "bounds": [2,2,1]},
      {"series": "A", "rank": 1, "p": 2, "r": 1, "degrees": [1], "bounds": [1]}
    ])");
    const JProfile& d4 = reg.find(DynkinType(Series::D, 4), 2);
    CHECK(d4.r == 3);
    CHECK(d4.degrees == std::vector<int>{1, 1, 3});
    CHECK(d4.bounds == std::vector<int>{2, 2, 1});
    CHECK(d4.degree_one_count() == 2);
    const JProfile& a1 = reg.find(DynkinType(Series::A, 1), 2);
    CHECK(a1.bounds == std::vector<int>{1});
    CHECK_THROWS_AS(reg.find(DynkinType(Series::B, 2), 2), jinv::InvalidInputError);
}

TEST_CASE("type-D invariants are enforced on load", "[jprofile]") {
    // r must be m + 1
    CHECK_THROWS_AS(jinv::registry_from_json_text(R"([
      {"series": "D", "rank": 4, "p": 2, "r": 5,
       "degrees": [1,1,3,5,7], "bounds": [2,1,1,1,1]}
    ])"),
                    jinv::ConsistencyError);
    // degree pattern 1, 1, 3 is forced
    CHECK_THROWS_AS(jinv::registry_from_json_text(R"([
      {"series": "D", "rank": 4, "p": 2, "r": 3, "degrees": [1,3,5], "bounds": [2,1,1]}
    ])"),
                    jinv::ConsistencyError);
    // k_1 = v_2(4) = 2 is forced
    CHECK_THROWS_AS(jinv::registry_from_json_text(R"([
      {"series": "D", "rank": 4, "p": 2, "r": 3, "degrees": [1,1,3], "bounds": [1,2,1]}
    ])"),
                    jinv::ConsistencyError);
    // short bounds list: k_1 derived as v_2(6) = 1
    auto reg = jinv::registry_from_json_text(R"([
      {"series": "D", "rank": 6, "p": 2, "r": 4, "degrees": [1,1,3,5], "bounds": [3,1,1]}
    ])");
    CHECK(reg.find(DynkinType(Series::D, 6), 2).bounds == std::vector<int>{1, 3, 1, 1});
}

TEST_CASE("schema violations are structural errors", "[jprofile]") {
    CHECK_THROWS_AS(jinv::registry_from_json_text("{}"), jinv::SchemaError);
    CHECK_THROWS_AS(jinv::registry_from_json_text("[[1,2]]"), jinv::SchemaError);
    CHECK_THROWS_AS(jinv::registry_from_json_text("not json"), jinv::SchemaError);
    // missing bounds
    CHECK_THROWS_AS(jinv::registry_from_json_text(R"([
      {"series": "A", "rank": 1, "p": 2, "r": 1, "degrees": [1]}
    ])"),
                    jinv::SchemaError);
    // degrees length != r
    CHECK_THROWS_AS(jinv::registry_from_json_text(R"([
      {"series": "A", "rank": 1, "p": 2, "r": 2, "degrees": [1], "bounds": [1, 1]}
    ])"),
                    jinv::SchemaError);
}

TEST_CASE("value violations are consistency errors", "[jprofile]") {
    // degree divisible by p
    CHECK_THROWS_AS(jinv::make_profile(std::nullopt, 2, {1, 2}, {1, 1}),
                    jinv::ConsistencyError);
    // degrees out of order
    CHECK_THROWS_AS(jinv::make_profile(std::nullopt, 2, {3, 1}, {1, 1}),
                    jinv::ConsistencyError);
    // p not prime
    CHECK_THROWS_AS(jinv::make_profile(std::nullopt, 6, {1}, {1}), jinv::ConsistencyError);
    // invalid Dynkin rank for the series arrives as a consistency error
    CHECK_THROWS_AS(jinv::registry_from_json_text(R"([
      {"series": "D", "rank": 3, "p": 2, "r": 2, "degrees": [1,1], "bounds": [0,2]}
    ])"),
                    jinv::ConsistencyError);
    // duplicate entries
    CHECK_THROWS_AS(jinv::registry_from_json_text(R"([
      {"series": "A", "rank": 1, "p": 2, "r": 1, "degrees": [1], "bounds": [1]},
      {"series": "A", "rank": 1, "p": 2, "r": 1, "degrees": [1], "bounds": [1]}
    ])"),
                    jinv::ConsistencyError);
}

TEST_CASE("bundled registry", "[jprofile]") {
    const auto& reg = jinv::bundled_profiles();
    CHECK(reg.contains(DynkinType(Series::A, 1), 2));
    CHECK(reg.contains(DynkinType(Series::A, 3), 2));
    for (int n = 4; n <= 12; ++n) CHECK(reg.contains(DynkinType(Series::D, n), 2));
    CHECK(reg.find(DynkinType(Series::D, 8), 2).bounds[0] == 3);
    CHECK(reg.find(DynkinType(Series::A, 7), 2).bounds == std::vector<int>{3});
}

TEST_CASE("truncated ring series", "[jprofile]") {
    JProfile p1 = jinv::make_profile(std::nullopt, 2, {1}, {1});
    CHECK(jinv::truncated_ring_poincare(p1, {1}) == IntPoly{1, 1});
    CHECK(jinv::truncated_ring_poincare(d113(), {0, 0, 0}) == IntPoly::one());
    CHECK(jinv::truncated_ring_poincare(d113(), {1, 1, 1}) ==
          jinv::testing::truncated_ring_by_enumeration(d113(), {1, 1, 1}));
    CHECK_THROWS_AS(jinv::truncated_ring_poincare(d113(), {1, 1}), jinv::LengthMismatchError);
}

TEST_CASE("truncated ring matches enumeration on random profiles", "[jprofile]") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        JProfile profile = jinv::testing::random_profile(rng, 4096);
        auto exps = jinv::testing::random_tuple_below(rng, profile.bounds);
        IntPoly closed = jinv::truncated_ring_poincare(profile, exps);
        CHECK(closed == jinv::testing::truncated_ring_by_enumeration(profile, exps));
        jinv::BigInt expect = 1;
        for (std::size_t i = 0; i < exps.size(); ++i)
            expect *= jinv::checked_pow(static_cast<std::uint64_t>(profile.p), exps[i]);
        CHECK(closed.eval(1) == expect);
    }
}

TEST_CASE("monomial order examples", "[jprofile]") {
    JProfile flat = jinv::make_profile(std::nullopt, 2, {1, 1}, {1, 1});
    CHECK(jinv::monomial_compare(Monomial{{1, 0}}, Monomial{{0, 1}}, flat) ==
          std::strong_ordering::less);
    CHECK(jinv::monomial_compare(Monomial{{1, 0}}, Monomial{{1, 0}}, flat) ==
          std::strong_ordering::equal);
    JProfile skew = jinv::make_profile(std::nullopt, 2, {1, 3}, {1, 1});
    CHECK(jinv::monomial_compare(Monomial{{3, 0}}, Monomial{{0, 1}}, skew) ==
          std::strong_ordering::less);
    CHECK_THROWS_AS(jinv::monomial_compare(Monomial{{1}}, Monomial{{0, 1}}, flat),
                    jinv::LengthMismatchError);
}

TEST_CASE("monomial order is total and graded by codimension", "[jprofile]") {
    std::mt19937 rng(31);
    JProfile profile = jinv::make_profile(std::nullopt, 3, {1, 2, 4}, {2, 2, 2});
    auto random_monomial = [&] {
        Monomial m;
        for (int i = 0; i < 3; ++i)
            m.exponents.push_back(std::uniform_int_distribution<int>(0, 4)(rng));
        return m;
    };
    for (int trial = 0; trial < 500; ++trial) {
        Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
        auto ab = jinv::monomial_compare(a, b, profile);
        auto ba = jinv::monomial_compare(b, a, profile);
        // antisymmetry and totality
        CHECK((ab == 0) == (ba == 0));
        if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
        if (ab == std::strong_ordering::equal) CHECK(a.exponents == b.exponents);
        // transitivity
        auto bc = jinv::monomial_compare(b, c, profile);
        if (ab != std::strong_ordering::greater && bc != std::strong_ordering::greater)
            CHECK(jinv::monomial_compare(a, c, profile) != std::strong_ordering::greater);
        // codimension resolves first
        if (jinv::monomial_codim(a, profile) < jinv::monomial_codim(b, profile))
            CHECK(ab == std::strong_ordering::less);
    }
}
