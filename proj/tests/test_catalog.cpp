#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <fusioncat/catalog.hpp>

using namespace fusioncat;

TEST_CASE("build_pointed produces group rings") {
    SECTION("Z/2") {
        const FusionRing ring = build_pointed({2});
        REQUIRE(ring.rank() == 2);
        CHECK(ring.n(1, 1, 0) == 1); // g^2 = 1
        CHECK(ring.dual(1) == 1);
        CHECK(ring.fiber_flag() == FiberFunctor::Yes);
    }
    SECTION("Klein group") {
        const FusionRing ring = build_pointed({2, 2});
        REQUIRE(ring.rank() == 4);
        for (std::size_t x = 0; x < 4; ++x) CHECK(ring.dual(x) == x);
        CHECK(verify_ring(ring).pass);
    }
    SECTION("Z/6 duals by negation") {
        const FusionRing ring = build_pointed({6});
        REQUIRE(ring.rank() == 6);
        CHECK(ring.dual(1) == 5);
        CHECK(ring.dual(2) == 4);
    }
    SECTION("empty factor list yields the trivial ring") {
        const FusionRing ring = build_pointed({});
        CHECK(ring.rank() == 1);
        CHECK(verify_ring(ring).pass);
    }
}

TEST_CASE("build_ty fusion rules and flags") {
    SECTION("TY(Z/2) is the Ising ring") {
        const FusionRing ty = build_ty({2}, 1);
        REQUIRE(ty.rank() == 3);
        CHECK(ring_isomorphic(ty, build_named("ising").ring));
    }
    SECTION("TY(Z/3) has d_rho = sqrt 3") {
        const FusionRing ty = build_ty({3}, 1);
        REQUIRE(ty.rank() == 4);
        const DimensionVector dims = fp_dimensions(ty);
        CHECK_THAT(dims.values[3], Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-10));
        CHECK(ty.fiber_flag() == FiberFunctor::No); // 3 is not a square
    }
    SECTION("TY(Z/9) has integer d_rho = 3") {
        const FusionRing ty = build_ty({9}, 2);
        REQUIRE(ty.rank() == 10);
        const DimensionVector dims = fp_dimensions(ty);
        CHECK_THAT(dims.values[9], Catch::Matchers::WithinAbs(3.0, 1e-10));
        CHECK(ty.fiber_flag() == FiberFunctor::Unknown);
    }
    SECTION("degenerate bicharacter parameters are rejected") {
        CHECK_THROWS_AS(build_ty({9}, 3), DegenerateBicharacter);
        CHECK_THROWS_AS(build_ty({4}, 2), DegenerateBicharacter);
    }
    SECTION("multi-factor groups are not supported") {
        CHECK_THROWS_AS(build_ty({2, 2}, 1), NonCyclicGroup);
    }
    SECTION("d_rho^2 = |G| across the series") {
        for (int n : {2, 3, 4, 5, 7, 9}) {
            const FusionRing ty = build_ty({n}, 1);
            const DimensionVector dims = fp_dimensions(ty);
            const double drho = dims.values[static_cast<std::size_t>(n)];
            CHECK_THAT(drho * drho, Catch::Matchers::WithinAbs(n, 1e-9));
        }
    }
}

TEST_CASE("build_psu2 truncated Clebsch-Gordan levels") {
    SECTION("k = 2 is the Z/2 rule set") {
        const FusionRing ring = build_psu2(2);
        REQUIRE(ring.rank() == 2);
        CHECK(ring.n(1, 1, 0) == 1);
        CHECK(ring.n(1, 1, 1) == 0);
    }
    SECTION("k = 3 matches fibonacci") {
        CHECK(ring_isomorphic(build_psu2(3), build_named("fibonacci").ring));
    }
    SECTION("k = 4 matches rep_s3 under an explicit permutation") {
        const FusionRing psu = build_psu2(4); // labels X0, X1, X2
        const FusionRing s3 = build_named("rep_s3").ring; // labels 1, sigma, pi
        REQUIRE(psu.rank() == 3);
        CHECK(ring_isomorphic(psu, s3));
        // X0 -> 1, X1 -> pi, X2 -> sigma
        const std::size_t perm[3] = {0, 2, 1};
        for (std::size_t x = 0; x < 3; ++x)
            for (std::size_t y = 0; y < 3; ++y)
                for (std::size_t z = 0; z < 3; ++z)
                    CHECK(psu.n(x, y, z) == s3.n(perm[x], perm[y], perm[z]));
    }
    SECTION("levels below 2 are rejected") {
        CHECK_THROWS_AS(build_psu2(1), LevelTooSmall);
    }
}

TEST_CASE("build_named catalog data") {
    const CatalogEntry a4 = build_named("rep_a4");
    REQUIRE(a4.ring.rank() == 4);
    const DimensionVector dims = fp_dimensions(a4.ring);
    CHECK(*dims.exact_integers == std::vector<long long>{1, 1, 1, 3});
    CHECK_THAT(dims.total(), Catch::Matchers::WithinAbs(12.0, 1e-9));

    const DimensionVector s3dims = fp_dimensions(build_named("rep_s3").ring);
    CHECK(*s3dims.exact_integers == std::vector<long long>{1, 1, 2});

    const CatalogEntry h = build_named("haagerup");
    CHECK(verify_ring(h.ring).pass);
    CHECK_FALSE(is_integral(h.ring).integral);

    CHECK_THROWS_AS(build_named("nonsense"), UnknownName);
}

TEST_CASE("every catalog entry passes verification") {
    for (const CatalogEntry& entry : all_entries()) {
        INFO(entry.name);
        CHECK(verify_ring(entry.ring).pass);
    }
}

TEST_CASE("ring_from_spec grammar") {
    CHECK(ring_from_spec("fibonacci").ring.rank() == 2);
    CHECK(ring_from_spec("vec_z5").ring.rank() == 5);
    CHECK(ring_from_spec("z5").ring.rank() == 5);
    CHECK(ring_from_spec("ty_z4_s3").ring.rank() == 5);
    CHECK(ring_from_spec("psu2_5").ring.rank() == 3);
    CHECK_THROWS_AS(ring_from_spec("zeta"), UnknownName);
    CHECK_THROWS_AS(ring_from_spec("vec_zx"), UnknownName);
}
