#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include <fusioncat/catalog.hpp>
#include <fusioncat/fusion_ring.hpp>

using namespace fusioncat;

namespace {

// independent per-object oracle: largest eigenvalue of the single fusion
// matrix N_X by power iteration, without going through the total action
double fp_dim_of_object(const FusionRing& ring, std::size_t x) {
    const std::size_t r = ring.rank();
    std::vector<double> v(r, 1.0), w(r, 0.0);
    double lambda = 1.0;
    for (int iter = 0; iter < 100000; ++iter) {
        double norm = 0;
        for (std::size_t y = 0; y < r; ++y) {
            double s = v[y]; // + identity shift keeps the iteration primitive
            for (std::size_t z = 0; z < r; ++z) s += ring.n(x, y, z) * v[z];
            w[y] = s;
            norm = std::max(norm, std::abs(s));
        }
        double delta = 0;
        for (std::size_t y = 0; y < r; ++y) {
            w[y] /= norm;
            delta = std::max(delta, std::abs(w[y] - v[y]));
        }
        v.swap(w);
        lambda = norm;
        if (delta < 1e-14) break;
    }
    return lambda - 1.0; // undo the identity shift
}

FusionRing mutate(const FusionRing& ring, std::size_t x, std::size_t y, std::size_t z,
                  int delta) {
    std::vector<int> tensor = ring.tensor();
    tensor[(x * ring.rank() + y) * ring.rank() + z] += delta;
    return FusionRing(ring.name() + "_mut", ring.labels(), ring.unit(),
                      [&] {
                          std::vector<std::size_t> d(ring.rank());
                          for (std::size_t i = 0; i < ring.rank(); ++i) d[i] = ring.dual(i);
                          return d;
                      }(),
                      tensor);
}

} // namespace

TEST_CASE("verify_ring accepts the catalog axioms") {
    CHECK(verify_ring(build_pointed({2})).pass);
    CHECK(verify_ring(build_named("fibonacci").ring).pass);
    CHECK(verify_ring(build_named("haagerup").ring).pass);
}

TEST_CASE("verify_ring reports the violated axiom with a witness") {
    const FusionRing fib = build_named("fibonacci").ring;

    SECTION("removing the self-duality coefficient breaks duality") {
        const FusionRing broken = mutate(fib, 1, 1, 0, -1);
        const VerificationReport rep = verify_ring(broken);
        REQUIRE_FALSE(rep.pass);
        CHECK(rep.axiom == "duality");
        CHECK(rep.witness[0] == 1);
        CHECK(rep.witness[1] == 1);
    }

    SECTION("unit row corruption is caught") {
        const FusionRing broken = mutate(fib, 0, 1, 0, 1);
        const VerificationReport rep = verify_ring(broken);
        REQUIRE_FALSE(rep.pass);
        CHECK(rep.axiom == "unit");
    }

    SECTION("asymmetric corruption breaks Frobenius reciprocity") {
        const FusionRing rep_s3 = build_named("rep_s3").ring;
        const FusionRing broken = mutate(rep_s3, 1, 2, 2, 1); // sigma pi gains a pi
        const VerificationReport rep = verify_ring(broken);
        REQUIRE_FALSE(rep.pass);
        CHECK((rep.axiom == "frobenius" || rep.axiom == "associativity"));
    }
}

TEST_CASE("the N^tau_tautau = 2 mutation yields a consistent based ring") {
    // tau^2 = 1 + 2 tau satisfies all four ring axioms (d_tau = 1 + sqrt 2),
    // so axiom checking alone cannot flag it; only the frozen catalog
    // dimension vector does.
    const FusionRing fib = build_named("fibonacci").ring;
    const FusionRing mutated = mutate(fib, 1, 1, 1, 1);
    CHECK(verify_ring(mutated).pass);

    const DimensionVector original = fp_dimensions(fib);
    double worst = 0;
    for (std::size_t x = 0; x < fib.rank(); ++x)
        for (std::size_t y = 0; y < fib.rank(); ++y) {
            double sum = 0;
            for (std::size_t z = 0; z < fib.rank(); ++z)
                sum += mutated.n(x, y, z) * original.values[z];
            const double target = original.values[x] * original.values[y];
            worst = std::max(worst, std::abs(sum - target) / target);
        }
    CHECK(worst > 1e-9); // the catalog-dims multiplicativity check fires
}

TEST_CASE("malformed tensors are rejected at construction") {
    CHECK_THROWS_AS(FusionRing("bad", {"1", "x"}, 0, {0, 1}, std::vector<int>(7, 0)),
                    MalformedRing);
    CHECK_THROWS_AS(FusionRing("bad", {"1", "x"}, 2, {0, 1}, std::vector<int>(8, 0)),
                    MalformedRing);
    CHECK_THROWS_AS(FusionRing("bad", {"1", "x"}, 0, {1, 1}, std::vector<int>(8, 0)),
                    MalformedRing);
}

TEST_CASE("fp_dimensions matches closed forms") {
    SECTION("pointed rings have dimension one everywhere") {
        for (int n : {2, 3, 5, 8}) {
            const DimensionVector dims = fp_dimensions(build_pointed({n}));
            for (double d : dims.values) CHECK_THAT(d, Catch::Matchers::WithinAbs(1.0, 1e-12));
        }
    }
    SECTION("fibonacci gives the golden ratio") {
        const DimensionVector dims = fp_dimensions(build_named("fibonacci").ring);
        CHECK_THAT(dims.values[1],
                   Catch::Matchers::WithinAbs((1.0 + std::sqrt(5.0)) / 2.0, 1e-11));
    }
    SECTION("haagerup gives (3+sqrt 13)/2") {
        const CatalogEntry h = build_named("haagerup");
        const DimensionVector dims = fp_dimensions(h.ring);
        const double expected = (3.0 + std::sqrt(13.0)) / 2.0;
        CHECK_THAT(dims.values[h.ring.label_index("rho")],
                   Catch::Matchers::WithinAbs(expected, 1e-11));
    }
    SECTION("per-object eigenvalue oracle agrees") {
        for (const char* name : {"fibonacci", "ising", "rep_s3", "rep_a4"}) {
            const FusionRing ring = build_named(name).ring;
            const DimensionVector dims = fp_dimensions(ring);
            for (std::size_t x = 0; x < ring.rank(); ++x)
                CHECK_THAT(dims.values[x],
                           Catch::Matchers::WithinAbs(fp_dim_of_object(ring, x), 1e-9));
        }
    }
    SECTION("non-verified rings are refused") {
        const FusionRing broken = mutate(build_named("fibonacci").ring, 1, 1, 0, -1);
        CHECK_THROWS_AS(fp_dimensions(broken), NonVerifiedRing);
    }
}

TEST_CASE("dimension invariants hold on the whole catalog") {
    for (const CatalogEntry& entry : all_entries()) {
        INFO(entry.name);
        const FusionRing& ring = entry.ring;
        REQUIRE(verify_ring(ring).pass);
        const DimensionVector dims = fp_dimensions(ring);
        CHECK_THAT(dims.values[ring.unit()], Catch::Matchers::WithinAbs(1.0, 1e-12));
        for (std::size_t x = 0; x < ring.rank(); ++x) {
            CHECK(dims.values[x] >= 1.0 - 1e-9);
            CHECK_THAT(dims.values[x],
                       Catch::Matchers::WithinAbs(dims.values[ring.dual(x)], 1e-10));
            for (std::size_t y = 0; y < ring.rank(); ++y) {
                double sum = 0;
                for (std::size_t z = 0; z < ring.rank(); ++z)
                    sum += ring.n(x, y, z) * dims.values[z];
                const double target = dims.values[x] * dims.values[y];
                CHECK_THAT(sum, Catch::Matchers::WithinAbs(target, 1e-9 * target));
            }
        }
    }
}

TEST_CASE("is_integral separates the catalog") {
    CHECK(is_integral(build_named("rep_s3").ring).integral);
    CHECK(is_integral(build_ty({9}, 2)).integral);

    const IntegralityVerdict ising = is_integral(build_named("ising").ring);
    REQUIRE_FALSE(ising.integral);
    REQUIRE(ising.nonintegral_labels.size() == 1);
    CHECK(ising.nonintegral_labels[0] == 2); // sigma
    CHECK_THAT(ising.nonintegral_values[0],
               Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-10));

    const IntegralityVerdict s3 = is_integral(build_named("rep_s3").ring);
    REQUIRE(s3.integer_dims);
    CHECK(*s3.integer_dims == std::vector<long long>{1, 1, 2});
}

TEST_CASE("tensor_multiplicities iterates the fusion action") {
    const FusionRing fib = build_named("fibonacci").ring;
    CHECK(tensor_multiplicities(fib, {1, 1}) == std::vector<BigInt>{1, 1});
    CHECK(tensor_multiplicities(fib, {0}) == std::vector<BigInt>{1, 0});

    const FusionRing ty3 = build_ty({3}, 1);
    const std::size_t rho = 3;
    CHECK(tensor_multiplicities(ty3, {rho, rho}) == std::vector<BigInt>{1, 1, 1, 0});

    CHECK_THROWS_AS(tensor_multiplicities(fib, {}), LabelOutOfRange);
    CHECK_THROWS_AS(tensor_multiplicities(fib, {5}), LabelOutOfRange);
}

TEST_CASE("tensor words associate") {
    for (const char* name : {"fibonacci", "rep_a4"}) {
        const FusionRing ring = build_named(name).ring;
        const std::size_t r = ring.rank();
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = 0; c < r; ++c) {
                    const auto left = tensor_multiplicities(ring, {a, b, c});
                    // expand (a, (b c)) through the fusion tensor
                    std::vector<BigInt> right(r, 0);
                    for (std::size_t z = 0; z < r; ++z) {
                        if (ring.n(b, c, z) == 0) continue;
                        const auto part = tensor_multiplicities(ring, {a, z});
                        for (std::size_t w = 0; w < r; ++w)
                            right[w] += ring.n(b, c, z) * part[w];
                    }
                    CHECK(left == right);
                }
    }
}

TEST_CASE("regular_object is the integer dimension vector") {
    CHECK(regular_object(build_pointed({2})) == std::vector<long long>{1, 1});
    CHECK(regular_object(build_named("rep_s3").ring) == std::vector<long long>{1, 1, 2});
    CHECK_THROWS_AS(regular_object(build_named("fibonacci").ring), NonIntegralRing);
}

TEST_CASE("the regular element identity holds in exact integers") {
    for (const char* spec : {"rep_s3", "rep_a4"}) {
        const FusionRing ring = build_named(spec).ring;
        const auto reg = regular_object(ring);
        for (std::size_t y = 0; y < ring.rank(); ++y)
            for (std::size_t z = 0; z < ring.rank(); ++z) {
                long long sum = 0;
                for (std::size_t x = 0; x < ring.rank(); ++x)
                    sum += reg[x] * ring.n(x, y, z);
                CHECK(sum == reg[y] * reg[z]);
            }
    }
    const FusionRing z6 = build_pointed({6});
    const auto reg = regular_object(z6);
    for (std::size_t y = 0; y < z6.rank(); ++y)
        for (std::size_t z = 0; z < z6.rank(); ++z) {
            long long sum = 0;
            for (std::size_t x = 0; x < z6.rank(); ++x) sum += reg[x] * z6.n(x, y, z);
            CHECK(sum == reg[y] * reg[z]);
        }
}

TEST_CASE("random single-entry mutations are detected") {
    // a mutated tensor must fail verify_ring or the multiplicativity check
    // against the original ring's dimension vector
    std::mt19937 rng(20240917);
    const std::vector<CatalogEntry> entries = all_entries();
    int performed = 0;
    while (performed < 25) {
        const CatalogEntry& entry = entries[rng() % entries.size()];
        const FusionRing& ring = entry.ring;
        const std::size_t r = ring.rank();
        const std::size_t x = rng() % r, y = rng() % r, z = rng() % r;
        const int delta = rng() % 2 == 0 ? 1 : -1;
        if (ring.n(x, y, z) + delta < 0) continue;
        ++performed;
        INFO(entry.name << " N[" << x << "][" << y << "][" << z << "] += " << delta);

        const FusionRing mutated = mutate(ring, x, y, z, delta);
        const bool verify_fails = !verify_ring(mutated).pass;

        const DimensionVector original = fp_dimensions(ring);
        bool multiplicativity_fails = false;
        for (std::size_t a = 0; a < r && !multiplicativity_fails; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                double sum = 0;
                for (std::size_t c = 0; c < r; ++c)
                    sum += mutated.n(a, b, c) * original.values[c];
                const double target = original.values[a] * original.values[b];
                if (std::abs(sum - target) > 1e-9 * target) {
                    multiplicativity_fails = true;
                    break;
                }
            }
        CHECK((verify_fails || multiplicativity_fails));
    }
}

TEST_CASE("ring files round-trip") {
    for (const char* name : {"fibonacci", "rep_a4", "haagerup"}) {
        const FusionRing ring = build_named(name).ring;
        std::stringstream buf;
        write_ring(ring, buf);
        const FusionRing back = read_ring(buf);
        CHECK(back.name() == ring.name());
        CHECK(back.labels() == ring.labels());
        CHECK(back.unit() == ring.unit());
        CHECK(back.tensor() == ring.tensor());
        for (std::size_t x = 0; x < ring.rank(); ++x) CHECK(back.dual(x) == ring.dual(x));
    }
}

TEST_CASE("ring parser rejects malformed input") {
    SECTION("duplicate N entries") {
        std::istringstream in(
            "ring dup\nlabels 1 x\nunit 0\ndual 0 1\nN 1 1 0 1\nN 1 1 0 1\n");
        CHECK_THROWS_AS(read_ring(in), MalformedRing);
    }
    SECTION("missing directives") {
        std::istringstream in("ring partial\nlabels 1 x\n");
        CHECK_THROWS_AS(read_ring(in), MalformedRing);
    }
    SECTION("indices out of range") {
        std::istringstream in("ring oob\nlabels 1 x\nunit 0\ndual 0 1\nN 2 0 0 1\n");
        CHECK_THROWS_AS(read_ring(in), MalformedRing);
    }
    SECTION("unknown directive") {
        std::istringstream in("ring odd\nlabels 1 x\nunit 0\ndual 0 1\nM 0 0 0 1\n");
        CHECK_THROWS_AS(read_ring(in), MalformedRing);
    }
    SECTION("comments and blank lines are fine") {
        std::istringstream in(
            "# a comment\nring ok\nlabels 1 x\nunit 0\ndual 0 1\n\nN 0 0 0 1\nN 0 1 1 1\nN 1 0 "
            "1 1\nN 1 1 0 1\n");
        const FusionRing ring = read_ring(in);
        CHECK(ring.name() == "ok");
        CHECK(verify_ring(ring).pass);
    }
}
