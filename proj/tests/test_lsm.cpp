#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include <fusioncat/catalog.hpp>
#include <fusioncat/lsm.hpp>

using namespace fusioncat;
using Elem = AbelianGroup::Elem;

namespace {

Lagrangian cyclic_lagrangian(const MetricGroup& m, int generator) {
    const AbelianGroup& g = m.base();
    const std::vector<Elem> gens{{generator % g.factors[0]}};
    int ord = 1;
    Elem cur = gens[0];
    while (cur != g.zero()) { cur = g.add(cur, gens[0]); ++ord; }
    return lagrangian_from_pair(m, gens, Bicharacter::trivial({ord}));
}

} // namespace

TEST_CASE("fiber functor verdicts") {
    SECTION("non-integral rings are refused a fiber functor, with witness") {
        const FiberFunctorVerdict v = fiber_functor_verdict(build_named("fibonacci"));
        CHECK(v.status == FiberFunctor::No);
        CHECK(v.witness == "tau");

        const FiberFunctorVerdict h = fiber_functor_verdict(build_named("haagerup"));
        CHECK(h.status == FiberFunctor::No);
        CHECK(h.witness == "rho");
        CHECK_THAT(h.witness_dim, Catch::Matchers::WithinAbs(3.302775637732, 1e-9));
    }
    SECTION("group categories carry catalog provenance") {
        CHECK(fiber_functor_verdict(build_named("rep_a4")).status == FiberFunctor::Yes);
        CHECK(fiber_functor_verdict(build_named("rep_s3")).status == FiberFunctor::Yes);
    }
    SECTION("integrality alone is never upgraded to yes") {
        const FusionRing ty9 = build_ty({9}, 1);
        const CatalogEntry entry{"ty_z9", ty9, "Tambara-Yamagami", ty9.fiber_flag()};
        CHECK(fiber_functor_verdict(entry).status == FiberFunctor::Unknown);
    }
}

TEST_CASE("vacua counting in the toric code") {
    const MetricGroup m = center_of_pointed({{2}});
    const Lagrangian one_e = cyclic_lagrangian(m, 0);
    const Lagrangian one_m = cyclic_lagrangian(m, 1);

    CHECK(vacua_count(m, one_e, one_e) == 2); // symmetry-breaking state
    CHECK(vacua_count(m, one_m, one_e) == 1); // the pure paramagnet
    CHECK(vacua_count(m, one_e, one_m) == 1);
    CHECK(vacua_count(m, one_m, one_m) == 2);

    SECTION("foreign Lagrangians are rejected") {
        const MetricGroup other = center_of_pointed({{3}});
        const Lagrangian foreign = cyclic_lagrangian(other, 0);
        CHECK_THROWS_AS(vacua_count(m, foreign, one_e), MetricGroupMismatch);
    }
}

TEST_CASE("vacua bounds, symmetry, and the transversality cross-check") {
    for (int n = 2; n <= 8; ++n) {
        INFO("n = " << n);
        const MetricGroup m = center_of_pointed({{n}});
        const auto ls = enumerate_lagrangians(m);
        for (const auto& ext : ls) {
            std::size_t min_vacua = m.base().order() + 1;
            bool some_trivial_intersection = false;
            for (const auto& state : ls) {
                const std::size_t v = vacua_count(m, state, ext);
                CHECK(v >= 1);
                CHECK(v <= m.base().order());
                CHECK(v == vacua_count(m, ext, state));
                min_vacua = std::min(min_vacua, v);
                if (v == 1) some_trivial_intersection = true;
            }
            CHECK((min_vacua == 1) == some_trivial_intersection);
        }
        // self-intersection is the full Lagrangian
        for (const auto& l : ls)
            CHECK(vacua_count(m, l, l) == m.base().order());
    }
}

TEST_CASE("LSM verdicts") {
    SECTION("no fiber functor forces gaplessness") {
        const StateVerdict h = lsm_verdict(build_named("haagerup"));
        CHECK(h.kind == StateKind::Gapless);
        CHECK(h.reason.find("no fiber functor") != std::string::npos);

        CHECK(lsm_verdict(build_named("ising")).kind == StateKind::Gapless);
        CHECK(lsm_verdict(build_named("fibonacci")).kind == StateKind::Gapless);
    }
    SECTION("a fiber functor leaves topological states unobstructed") {
        const FusionRing z5 = build_pointed({5});
        const CatalogEntry entry{"vec_z5", z5, "group ring", FiberFunctor::Yes};
        CHECK(lsm_verdict(entry).kind == StateKind::Topological);
    }
    SECTION("unknown fiber functor status stays indeterminate") {
        const FusionRing ty9 = build_ty({9}, 1);
        const CatalogEntry entry{"ty_z9", ty9, "Tambara-Yamagami", ty9.fiber_flag()};
        const StateVerdict v = lsm_verdict(entry);
        CHECK(v.kind == StateKind::Indeterminate);
        CHECK(v.reason.find("Morita") != std::string::npos);
    }
}

TEST_CASE("duality gaplessness verdicts") {
    SECTION("the Kramers-Wannier swap forces gaplessness") {
        const MetricGroup m = center_of_pointed({{2}});
        const DualityVerdict v = duality_gapless_verdict(m, ty_duality_auto(m, 1));
        CHECK(v.kind == StateKind::Gapless);
        CHECK(v.anomaly.anomalous);
    }
    SECTION("square orders report their fixed Lagrangians") {
        const MetricGroup m = center_of_pointed({{9}});
        const DualityVerdict v = duality_gapless_verdict(m, ty_duality_auto(m, 1));
        CHECK(v.kind == StateKind::Indeterminate);
        CHECK_FALSE(v.anomaly.fixed.empty());
    }
    SECTION("Z/6 duality is gapless") {
        const MetricGroup m = center_of_pointed({{6}});
        CHECK(duality_gapless_verdict(m, ty_duality_auto(m, 1)).kind == StateKind::Gapless);
    }
    SECTION("every non-square order up to 15 is gapless for every parameter") {
        for (int n = 2; n <= 15; ++n) {
            const int isq = static_cast<int>(std::lround(std::sqrt(double(n))));
            if (isq * isq == n) continue;
            const MetricGroup m = center_of_pointed({{n}});
            for (int s = 1; s < n; ++s) {
                if (std::gcd(s, n) != 1) continue;
                INFO("n = " << n << ", s = " << s);
                CHECK(duality_gapless_verdict(m, ty_duality_auto(m, s)).kind ==
                      StateKind::Gapless);
            }
        }
    }
}

TEST_CASE("realizability reports") {
    const RealizabilityReport s3 = realizability_report(build_named("rep_s3"));
    CHECK(s3.anyon_chain);
    CHECK(s3.tensor_product);
    CHECK(s3.onsite == FiberFunctor::Yes);

    const FusionRing ty9 = build_ty({9}, 1);
    const RealizabilityReport ty =
        realizability_report({"ty_z9", ty9, "Tambara-Yamagami", ty9.fiber_flag()});
    CHECK(ty.tensor_product);
    CHECK(ty.onsite == FiberFunctor::Unknown);

    const RealizabilityReport fib = realizability_report(build_named("fibonacci"));
    CHECK(fib.anyon_chain);
    CHECK_FALSE(fib.tensor_product);
    CHECK(fib.onsite == FiberFunctor::No);

    SECTION("onsite yes implies tensor product across the catalog") {
        for (const CatalogEntry& entry : all_entries()) {
            const RealizabilityReport rep = realizability_report(entry);
            if (rep.onsite == FiberFunctor::Yes) CHECK(rep.tensor_product);
        }
    }
}

TEST_CASE("the realizability matrix of the paper") {
    for (const char* name : {"fibonacci", "ising", "haagerup"})
        CHECK_FALSE(is_integral(build_named(name).ring).integral);
    CHECK_FALSE(is_integral(build_psu2(3)).integral);
    CHECK_FALSE(is_integral(build_psu2(5)).integral);

    CHECK(is_integral(build_named("rep_s3").ring).integral);
    CHECK(is_integral(build_named("rep_a4").ring).integral);
    for (int n = 2; n <= 6; ++n) CHECK(is_integral(build_pointed({n})).integral);
    CHECK(is_integral(build_ty({9}, 1)).integral);

    // every non-integral entry is denied a fiber functor
    for (const CatalogEntry& entry : all_entries()) {
        if (is_integral(entry.ring).integral) continue;
        INFO(entry.name);
        CHECK(fiber_functor_verdict(entry).status == FiberFunctor::No);
    }
}
