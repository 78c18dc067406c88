#include "oriseq/oracle.hpp"

#include "oriseq/counting.hpp"
#include "oriseq/verify.hpp"

#include <doctest.h>

using namespace oriseq;
using oracle::TargetProperty;

TEST_CASE("binary order-2 searches find nothing") {
    // Over Z_2 negation is the identity, so both properties coincide and
    // no nonempty cycle avoids reverse pairs at order 2.
    auto os = oracle::exhaustive_max(2, 2, TargetProperty::orientable);
    CHECK(os.max_period == 0);
    CHECK_FALSE(os.witness.has_value());
    auto nos = oracle::exhaustive_max(2, 2, TargetProperty::negative_orientable);
    CHECK(nos.max_period == 0);
    CHECK(counting::nos_bound(2, 2) == 0);
}

TEST_CASE("order-2 maxima match the closed forms") {
    for (int q = 3; q <= 5; ++q) {
        CAPTURE(q);
        auto os = oracle::exhaustive_max(q, 2, TargetProperty::orientable);
        CHECK(os.max_period == counting::os2_max_period(q));
        REQUIRE(os.witness.has_value());
        CHECK(os.witness->period() == os.max_period);
        CHECK(verify::is_orientable(*os.witness, 2).holds);
    }
    for (int q = 3; q <= 4; ++q) {
        CAPTURE(q);
        auto nos = oracle::exhaustive_max(q, 2, TargetProperty::negative_orientable);
        CHECK(nos.max_period == counting::nos_bound(q, 2));
        REQUIRE(nos.witness.has_value());
        CHECK(verify::is_negative_orientable(*nos.witness, 2).holds);
    }
}

TEST_CASE("ternary order-3 maxima") {
    // The orientable count bound (27 - 9) / 2 = 9 is attained.
    auto os = oracle::exhaustive_max(3, 3, TargetProperty::orientable);
    CHECK(os.max_period == 9);
    REQUIRE(os.witness.has_value());
    CHECK(verify::is_orientable(*os.witness, 3).holds);

    // The negative orientable bound is 11; the true maximum is one short of
    // it, which the pseudoweight construction already reaches.
    auto nos = oracle::exhaustive_max(3, 3, TargetProperty::negative_orientable);
    CHECK(nos.max_period == 10);
    CHECK(counting::nos_bound(3, 3) == 11);
    REQUIRE(nos.witness.has_value());
    CHECK(verify::is_negative_orientable(*nos.witness, 3).holds);
    CHECK(nos.states_explored > 0);
}

TEST_CASE("search refuses oversized state spaces") {
    CHECK_THROWS_AS(oracle::exhaustive_max(3, 6, TargetProperty::orientable),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle::exhaustive_max(3, 1, TargetProperty::orientable),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle::exhaustive_negasymmetric_count(3, 14), std::invalid_argument);
}

TEST_CASE("exhaustive scans agree with the enumerators") {
    CHECK(oracle::exhaustive_negasymmetric_count(3, 1) == 1);
    CHECK(oracle::exhaustive_negasymmetric_count(3, 3) == 3);
    CHECK(oracle::exhaustive_negasymmetric_count(4, 2) == 4);
    CHECK(oracle::exhaustive_pseudoweight_count(3, 2, HalfInt::halves(5)) == 2);
    CHECK(oracle::exhaustive_pseudoweight_count(3, 2, HalfInt::whole(2)) == 1);
    CHECK(oracle::exhaustive_zerofree_weight_count(4, 2, 3) == 2);
    CHECK(oracle::exhaustive_zerofree_weight_count(4, 2, 9) == 0);
}
