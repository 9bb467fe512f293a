#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>
#include <vector>

#include "fusioncat/errors.hpp"
#include "fusioncat/fusion_ring.hpp"

namespace fusioncat {

struct CatalogEntry {
    std::string name;
    FusionRing ring;
    std::string notes;
    FiberFunctor fiber_functor_flag = FiberFunctor::Unknown;
};

namespace detail {

inline FusionRing checked(FusionRing ring) {
    if (auto rep = verify_ring(ring); !rep)
        throw MalformedRing("catalog ring '" + ring.name() + "' violates axiom '" + rep.axiom +
                            "'");
    return ring;
}

inline std::vector<int> zero_tensor(std::size_t r) { return std::vector<int>(r * r * r, 0); }

inline void set_n(std::vector<int>& t, std::size_t r, std::size_t x, std::size_t y, std::size_t z,
                  int m) {
    t[(x * r + y) * r + z] = m;
}

} // namespace detail

/// Group ring of G = ⊕ Z/m_i: invertible simples, N^Z_{XY} = [Z = X+Y],
/// dual = negation. An empty factor list yields the trivial rank-1 ring.
inline FusionRing build_pointed(const std::vector<int>& cyclic_factors) {
    std::vector<int> factors;
    for (int m : cyclic_factors) {
        if (m < 1) throw MalformedRing("cyclic factor must be >= 1");
        factors.push_back(m);
    }
    std::size_t order = 1;
    for (int m : factors) order *= static_cast<std::size_t>(m);

    // elements enumerated with the last factor fastest
    auto element = [&](std::size_t idx) {
        std::vector<int> e(factors.size());
        for (std::size_t i = factors.size(); i-- > 0;) {
            e[i] = static_cast<int>(idx % factors[i]);
            idx /= factors[i];
        }
        return e;
    };
    auto index_of = [&](const std::vector<int>& e) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < factors.size(); ++i)
            idx = idx * factors[i] + static_cast<std::size_t>(e[i]);
        return idx;
    };

    std::vector<std::string> labels(order);
    std::vector<std::size_t> dual(order);
    std::vector<int> fusion = detail::zero_tensor(order);
    for (std::size_t a = 0; a < order; ++a) {
        const auto ea = element(a);
        std::string l;
        for (std::size_t i = 0; i < ea.size(); ++i) l += (i ? "," : "") + std::to_string(ea[i]);
        labels[a] = l.empty() ? "0" : l;
        std::vector<int> neg(ea.size());
        for (std::size_t i = 0; i < ea.size(); ++i) neg[i] = (factors[i] - ea[i]) % factors[i];
        dual[a] = index_of(neg);
        for (std::size_t b = 0; b < order; ++b) {
            const auto eb = element(b);
            std::vector<int> sum(ea.size());
            for (std::size_t i = 0; i < ea.size(); ++i) sum[i] = (ea[i] + eb[i]) % factors[i];
            detail::set_n(fusion, order, a, b, index_of(sum), 1);
        }
    }

    std::string name = "vec_z";
    for (std::size_t i = 0; i < factors.size(); ++i)
        name += (i ? "x" : "") + std::to_string(factors[i]);
    if (factors.empty()) name = "vec_trivial";
    return detail::checked(
        FusionRing(name, labels, index_of(std::vector<int>(factors.size(), 0)), dual, fusion,
                   FiberFunctor::Yes));
}

/// Tambara-Yamagami ring over cyclic Z/n with bicharacter
/// beta(a,b) = exp(2 pi i s a b / n): group part plus a single object rho
/// with a rho = rho a = rho and rho^2 = sum of all group elements.
inline FusionRing build_ty(const std::vector<int>& cyclic_factors, int bichar_param) {
    if (cyclic_factors.size() != 1)
        throw NonCyclicGroup("Tambara-Yamagami construction supports cyclic groups only");
    const int n = cyclic_factors[0];
    if (n < 1) throw MalformedRing("cyclic factor must be >= 1");
    if (std::gcd(((bichar_param % n) + n) % n, n) != 1)
        throw DegenerateBicharacter("s = " + std::to_string(bichar_param) +
                                    " shares a factor with n = " + std::to_string(n));

    const std::size_t r = static_cast<std::size_t>(n) + 1;
    const std::size_t rho = static_cast<std::size_t>(n);
    std::vector<std::string> labels;
    for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
    labels.push_back("rho");
    std::vector<std::size_t> dual(r);
    std::vector<int> fusion = detail::zero_tensor(r);
    for (int a = 0; a < n; ++a) {
        dual[a] = static_cast<std::size_t>((n - a) % n);
        for (int b = 0; b < n; ++b)
            detail::set_n(fusion, r, a, b, static_cast<std::size_t>((a + b) % n), 1);
        detail::set_n(fusion, r, a, rho, rho, 1);
        detail::set_n(fusion, r, rho, a, rho, 1);
        detail::set_n(fusion, r, rho, rho, a, 1);
    }
    dual[rho] = rho;

    // non-square |G| forces an irrational sqrt(|G|) dimension, hence no fiber functor
    const int isq = static_cast<int>(std::nearbyint(std::sqrt(static_cast<double>(n))));
    const bool square = isq * isq == n;
    return detail::checked(FusionRing("ty_z" + std::to_string(n) + "_s" +
                                          std::to_string(bichar_param),
                                      labels, 0, dual, fusion,
                                      square ? FiberFunctor::Unknown : FiberFunctor::No));
}

/// Integer-spin sector of sl2 level k: simples X_j, j = 0..floor(k/2), with
/// truncated Clebsch-Gordan fusion. All objects self-dual.
inline FusionRing build_psu2(int k) {
    if (k < 2) throw LevelTooSmall("level k must be >= 2");
    const int jmax = k / 2;
    const std::size_t r = static_cast<std::size_t>(jmax) + 1;
    std::vector<std::string> labels;
    for (int j = 0; j <= jmax; ++j) labels.push_back("X" + std::to_string(j));
    std::vector<std::size_t> dual(r);
    for (std::size_t i = 0; i < r; ++i) dual[i] = i;
    std::vector<int> fusion = detail::zero_tensor(r);
    for (int j = 0; j <= jmax; ++j)
        for (int l = 0; l <= jmax; ++l)
            for (int m = 0; m <= jmax; ++m) {
                const bool allowed = std::abs(j - l) <= m && m <= std::min(j + l, k - j - l);
                if (allowed)
                    detail::set_n(fusion, r, static_cast<std::size_t>(j),
                                  static_cast<std::size_t>(l), static_cast<std::size_t>(m), 1);
            }
    return detail::checked(
        FusionRing("psu2_" + std::to_string(k), labels, 0, dual, fusion, FiberFunctor::Unknown));
}

namespace detail {

inline FusionRing build_fibonacci() {
    std::vector<int> fusion = zero_tensor(2);
    set_n(fusion, 2, 0, 0, 0, 1);
    set_n(fusion, 2, 0, 1, 1, 1);
    set_n(fusion, 2, 1, 0, 1, 1);
    set_n(fusion, 2, 1, 1, 0, 1);
    set_n(fusion, 2, 1, 1, 1, 1);
    return FusionRing("fibonacci", {"1", "tau"}, 0, {0, 1}, fusion, FiberFunctor::Unknown);
}

inline FusionRing build_ising() {
    // {1, psi, sigma}: psi^2 = 1, psi sigma = sigma psi = sigma, sigma^2 = 1 + psi
    const std::size_t r = 3;
    std::vector<int> fusion = zero_tensor(r);
    set_n(fusion, r, 0, 0, 0, 1);
    set_n(fusion, r, 0, 1, 1, 1);
    set_n(fusion, r, 0, 2, 2, 1);
    set_n(fusion, r, 1, 0, 1, 1);
    set_n(fusion, r, 1, 1, 0, 1);
    set_n(fusion, r, 1, 2, 2, 1);
    set_n(fusion, r, 2, 0, 2, 1);
    set_n(fusion, r, 2, 1, 2, 1);
    set_n(fusion, r, 2, 2, 0, 1);
    set_n(fusion, r, 2, 2, 1, 1);
    return FusionRing("ising", {"1", "psi", "sigma"}, 0, {0, 1, 2}, fusion, FiberFunctor::Unknown);
}

inline FusionRing build_rep_s3() {
    // {1, sigma, pi}: sigma^2 = 1, sigma pi = pi sigma = pi, pi^2 = 1 + sigma + pi
    const std::size_t r = 3;
    std::vector<int> fusion = zero_tensor(r);
    set_n(fusion, r, 0, 0, 0, 1);
    set_n(fusion, r, 0, 1, 1, 1);
    set_n(fusion, r, 0, 2, 2, 1);
    set_n(fusion, r, 1, 0, 1, 1);
    set_n(fusion, r, 1, 1, 0, 1);
    set_n(fusion, r, 1, 2, 2, 1);
    set_n(fusion, r, 2, 0, 2, 1);
    set_n(fusion, r, 2, 1, 2, 1);
    set_n(fusion, r, 2, 2, 0, 1);
    set_n(fusion, r, 2, 2, 1, 1);
    set_n(fusion, r, 2, 2, 2, 1);
    return FusionRing("rep_s3", {"1", "sigma", "pi"}, 0, {0, 1, 2}, fusion, FiberFunctor::Yes);
}

inline FusionRing build_rep_a4() {
    // {1, chi, chi2, pi}: chi^3 = 1, chi pi = pi, pi^2 = 1 + chi + chi2 + 2 pi
    const std::size_t r = 4;
    std::vector<int> fusion = zero_tensor(r);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) set_n(fusion, r, a, b, (a + b) % 3, 1);
    for (std::size_t a = 0; a < 3; ++a) {
        set_n(fusion, r, a, 3, 3, 1);
        set_n(fusion, r, 3, a, 3, 1);
    }
    set_n(fusion, r, 3, 3, 0, 1);
    set_n(fusion, r, 3, 3, 1, 1);
    set_n(fusion, r, 3, 3, 2, 1);
    set_n(fusion, r, 3, 3, 3, 2);
    return FusionRing("rep_a4", {"1", "chi", "chi2", "pi"}, 0, {0, 2, 1, 3}, fusion,
                      FiberFunctor::Yes);
}

inline FusionRing build_haagerup() {
    // {1, a, a2, rho, arho, a2rho}: a^3 = 1, rho a = a^2 rho,
    // rho^2 = 1 + rho + a rho + a^2 rho. Fusion data from the subfactor
    // literature; verify_ring at load makes it self-validating.
    const std::size_t r = 6;
    auto g = [](std::size_t i) { return i; };          // a^i, i in 0..2
    auto gr = [](std::size_t i) { return 3 + i; };     // a^i rho
    std::vector<int> fusion = zero_tensor(r);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            set_n(fusion, r, g(i), g(j), g((i + j) % 3), 1);        // a^i a^j
            set_n(fusion, r, g(i), gr(j), gr((i + j) % 3), 1);      // a^i (a^j rho)
            set_n(fusion, r, gr(i), g(j), gr((i + 2 * j) % 3), 1);  // (a^i rho) a^j
            // (a^i rho)(a^j rho) = a^{i+2j} + rho + a rho + a^2 rho
            set_n(fusion, r, gr(i), gr(j), g((i + 2 * j) % 3), 1);
            for (std::size_t m = 0; m < 3; ++m) set_n(fusion, r, gr(i), gr(j), gr(m), 1);
        }
    return FusionRing("haagerup", {"1", "a", "a2", "rho", "arho", "a2rho"}, 0, {0, 2, 1, 3, 4, 5},
                      fusion, FiberFunctor::No);
}

} // namespace detail

/// Named catalog entries; every ring is axiom-checked at construction.
inline CatalogEntry build_named(const std::string& name) {
    if (name == "fibonacci")
        return {name, detail::checked(detail::build_fibonacci()),
                "rank 2, tau^2 = 1 + tau (golden ratio dimension)", FiberFunctor::Unknown};
    if (name == "ising")
        return {name, detail::checked(detail::build_ising()),
                "rank 3, sigma^2 = 1 + psi, d_sigma = sqrt(2)", FiberFunctor::Unknown};
    if (name == "rep_s3")
        return {name, detail::checked(detail::build_rep_s3()),
                "representation ring of S3, dims (1,1,2)", FiberFunctor::Yes};
    if (name == "rep_a4")
        return {name, detail::checked(detail::build_rep_a4()),
                "representation ring of A4, dims (1,1,1,3)", FiberFunctor::Yes};
    if (name == "haagerup")
        return {name, detail::checked(detail::build_haagerup()),
                "Haagerup subfactor fusion ring, d_rho = (3+sqrt(13))/2", FiberFunctor::No};
    throw UnknownName("no catalog entry named '" + name + "'");
}

/// Fixed registry used by the property suites.
inline std::vector<CatalogEntry> all_entries() {
    std::vector<CatalogEntry> entries;
    for (const char* n : {"fibonacci", "ising", "rep_s3", "rep_a4", "haagerup"})
        entries.push_back(build_named(n));
    for (int n : {2, 3, 4, 6}) {
        FusionRing ring = build_pointed({n});
        entries.push_back({ring.name(), ring, "group ring of Z/" + std::to_string(n),
                           FiberFunctor::Yes});
    }
    for (int n : {2, 3, 9}) {
        FusionRing ring = build_ty({n}, 1);
        entries.push_back({ring.name(), ring, "Tambara-Yamagami over Z/" + std::to_string(n),
                           ring.fiber_flag()});
    }
    for (int k : {2, 3, 4, 5}) {
        FusionRing ring = build_psu2(k);
        entries.push_back({ring.name(), ring, "integer spins of sl2 level " + std::to_string(k),
                           FiberFunctor::Unknown});
    }
    return entries;
}

/// Ring-spec grammar accepted by the CLI --ring flag:
///   catalog names (fibonacci, ising, rep_s3, rep_a4, haagerup),
///   vec_zN | zN, ty_zN_sS, psu2_K, or a path to a ring file.
inline CatalogEntry ring_from_spec(const std::string& spec) {
    auto parse_int = [](const std::string& s, const std::string& what) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw UnknownName("cannot parse " + what + " in ring spec '" + s + "'");
        }
    };
    for (const char* n : {"fibonacci", "ising", "rep_s3", "rep_a4", "haagerup"})
        if (spec == n) return build_named(n);
    if (spec.rfind("vec_z", 0) == 0 || (spec.rfind("z", 0) == 0 && spec.size() > 1 &&
                                        std::isdigit(static_cast<unsigned char>(spec[1])))) {
        const std::string digits = spec.rfind("vec_z", 0) == 0 ? spec.substr(5) : spec.substr(1);
        FusionRing ring = build_pointed({parse_int(digits, "group order")});
        return {ring.name(), ring, "group ring", FiberFunctor::Yes};
    }
    if (spec.rfind("ty_z", 0) == 0) {
        const auto sep = spec.find("_s", 4);
        const int n = parse_int(spec.substr(4, sep == std::string::npos ? std::string::npos
                                                                        : sep - 4),
                                "group order");
        const int s = sep == std::string::npos ? 1 : parse_int(spec.substr(sep + 2), "parameter s");
        FusionRing ring = build_ty({n}, s);
        return {ring.name(), ring, "Tambara-Yamagami", ring.fiber_flag()};
    }
    if (spec.rfind("psu2_", 0) == 0) {
        FusionRing ring = build_psu2(parse_int(spec.substr(5), "level"));
        return {ring.name(), ring, "integer spins of sl2", FiberFunctor::Unknown};
    }
    if (std::ifstream file(spec); file) {
        // file rings are not pre-verified here; `ring verify` reports on them
        // and every dimension-dependent operation re-checks the axioms
        FusionRing ring = read_ring(file);
        return {ring.name(), ring, "loaded from " + spec, FiberFunctor::Unknown};
    }
    throw UnknownName("unknown ring spec '" + spec + "'");
}

/// True when a label bijection fixing the unit carries one fusion tensor onto
/// the other (brute force; intended for small catalog ranks).
inline bool ring_isomorphic(const FusionRing& a, const FusionRing& b) {
    if (a.rank() != b.rank()) return false;
    const std::size_t r = a.rank();
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        if (perm[a.unit()] != b.unit()) continue;
        bool ok = true;
        for (std::size_t x = 0; x < r && ok; ++x) {
            if (perm[a.dual(x)] != b.dual(perm[x])) { ok = false; break; }
            for (std::size_t y = 0; y < r && ok; ++y)
                for (std::size_t z = 0; z < r; ++z)
                    if (a.n(x, y, z) != b.n(perm[x], perm[y], perm[z])) { ok = false; break; }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace fusioncat
