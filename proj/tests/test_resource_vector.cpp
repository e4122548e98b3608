#include <doctest.h>

#include <cmath>
#include <limits>

#include "slicenet/error.hpp"
#include "slicenet/resource_vector.hpp"
#include "slicenet/rng.hpp"

using namespace slicenet;

TEST_CASE("rv_add") {
    CHECK(rv_add({0, 0, 0}, {5, 1, 2}) == ResourceVector(5, 1, 2));
    CHECK(rv_add({100, 9, 1234}, {200, 1, 1234}) == ResourceVector(300, 10, 2468));
    CHECK(rv_add({1, 2, 3}, {4, 5, 6}) == ResourceVector(5, 7, 9));

    const double big = std::numeric_limits<double>::max();
    CHECK_THROWS_AS(rv_add({big, 0, 0}, {big, 0, 0}), ValidationError);
}

TEST_CASE("rv_fits_within") {
    CHECK(rv_fits_within({100, 9, 1234}, {1000, 10, 10000}));
    CHECK_FALSE(rv_fits_within({100, 9, 1234}, {900, 1, 8766}));
    CHECK(rv_fits_within({0, 0, 0}, {0, 0, 0}));
}

TEST_CASE("components must be finite and non-negative") {
    CHECK_THROWS_AS(ResourceVector(-1, 0, 0), ValidationError);
    CHECK_THROWS_AS(ResourceVector(0, std::nan(""), 0), ValidationError);
    CHECK_THROWS_AS(ResourceVector(0, 0, std::numeric_limits<double>::infinity()), ValidationError);
    CHECK_THROWS_AS(rv_sub({1, 1, 1}, {2, 0, 0}), ValidationError);
    CHECK(rv_sub({5, 7, 9}, {4, 5, 6}) == ResourceVector(1, 2, 3));
}

TEST_CASE("dimension names round-trip") {
    for (int d = 0; d < kDimensions; ++d) {
        const auto dim = static_cast<Dimension>(d);
        CHECK(parse_dimension(dimension_name(dim)) == dim);
    }
    CHECK_THROWS_AS(parse_dimension("bandwidth"), ValidationError);
}

TEST_CASE("algebra properties on random integral vectors") {
    Rng rng(7);
    const auto draw = [&] {
        return ResourceVector(static_cast<double>(rng.uniform_index(1000)), static_cast<double>(rng.uniform_index(1000)),
                              static_cast<double>(rng.uniform_index(1000)));
    };
    for (int i = 0; i < 2000; ++i) {
        const auto a = draw(), b = draw(), c = draw(), r = draw();
        CHECK(rv_add(a, b) == rv_add(b, a));
        CHECK(rv_add(rv_add(a, b), c) == rv_add(a, rv_add(b, c)));
        if (rv_fits_within(a, r) && rv_fits_within(b, rv_sub(r, a))) {
            CHECK(rv_fits_within(rv_add(a, b), r));
        }
    }
}
