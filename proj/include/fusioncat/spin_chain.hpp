#pragma once

#include <cstdint>
#include <vector>

#include "fusioncat/errors.hpp"
#include "fusioncat/fusion_ring.hpp"

namespace fusioncat {

struct ChainDims {
    std::vector<BigInt> end_dims;   // dim End(X^{tensor k}), k = 1..n
    bool generator_self_dual = true; // chain constructions assume a self-dual X
};

/// dim End(X^{tensor k}) = sum_Y m_k[Y]^2 where m_k is the multiplicity
/// vector of X^{tensor k}. `object` is a multiplicity vector, so direct sums
/// are allowed as generators.
inline ChainDims chain_dims_object(const FusionRing& ring, const std::vector<BigInt>& object,
                                   int n) {
    if (n < 1) throw WindowTooSmall("chain length must be >= 1");
    if (object.size() != ring.rank()) throw MalformedRing("object vector length mismatch");

    ChainDims out;
    for (std::size_t x = 0; x < ring.rank(); ++x)
        if (object[x] != 0 && object[ring.dual(x)] != object[x]) out.generator_self_dual = false;

    std::vector<BigInt> vec(ring.rank(), 0);
    vec[ring.unit()] = 1;
    for (int k = 1; k <= n; ++k) {
        // one fusion step with the (possibly non-simple) object
        std::vector<BigInt> next(ring.rank(), 0);
        for (std::size_t x = 0; x < ring.rank(); ++x) {
            if (object[x] == 0) continue;
            const auto step = apply_fusion(ring, vec, x);
            for (std::size_t z = 0; z < ring.rank(); ++z) next[z] += object[x] * step[z];
        }
        vec = std::move(next);
        BigInt dim = 0;
        for (const BigInt& m : vec) dim += m * m;
        out.end_dims.push_back(dim);
    }
    return out;
}

inline ChainDims chain_dims(const FusionRing& ring, std::size_t x, int n) {
    if (x >= ring.rank()) throw LabelOutOfRange("chain generator label out of range");
    std::vector<BigInt> object(ring.rank(), 0);
    object[x] = 1;
    return chain_dims_object(ring, object, n);
}

struct BigradedDims {
    std::vector<std::vector<long long>> dims; // dims[X][Y] = dim(_X H _Y)
    long long onsite = 0;                     // d = sum d_X^2
};

/// Bigraded dimensions of the regular-object realization:
/// dims[X][Y] = multiplicity of X in R tensor Y = d_X d_Y, with local
/// Hilbert space dimension d = sum d_X^2. Exact integer arithmetic.
inline BigradedDims regular_bigraded(const FusionRing& ring) {
    const std::vector<long long> reg = regular_object(ring); // throws NonIntegralRing
    const std::size_t r = ring.rank();

    BigradedDims out;
    out.dims.assign(r, std::vector<long long>(r, 0));
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
            long long mult = 0;
            for (std::size_t w = 0; w < r; ++w)
                mult += reg[w] * ring.n(w, y, x);
            out.dims[x][y] = mult;
            if (mult != reg[x] * reg[y])
                throw NonVerifiedRing("bigraded dimension disagrees with d_X d_Y");
        }
    for (long long d : reg) out.onsite += d * d;
    return out;
}

struct EmbeddingReport {
    bool pass = true;
    int k = 0;
    long long onsite = 0;
    BigInt lhs_total = 0;  // sum over X,Y of (d_X d_Y d^{k-1})^2
    BigInt bound = 0;      // d^{2(k+1)}
};

/// Dimension bookkeeping of the spread-1 embedding: the k-th power of the
/// bigraded matrix must equal d_X d_Y d^{k-1} entrywise, and the image must
/// fit in the k+1 site algebra.
inline EmbeddingReport embedding_dim_check(const FusionRing& ring, int k) {
    if (k < 1) throw WindowTooSmall("embedding check needs k >= 1");
    const BigradedDims bg = regular_bigraded(ring);
    const std::vector<long long> reg = regular_object(ring);
    const std::size_t r = ring.rank();

    // D^k with exact integers
    std::vector<std::vector<BigInt>> power(r, std::vector<BigInt>(r, 0));
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) power[x][y] = bg.dims[x][y];
    for (int step = 1; step < k; ++step) {
        std::vector<std::vector<BigInt>> next(r, std::vector<BigInt>(r, 0));
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t w = 0; w < r; ++w) {
                if (power[x][w] == 0) continue;
                for (std::size_t y = 0; y < r; ++y)
                    next[x][y] += power[x][w] * bg.dims[w][y];
            }
        power = std::move(next);
    }

    EmbeddingReport rep;
    rep.k = k;
    rep.onsite = bg.onsite;
    BigInt dpow = 1; // d^{k-1}
    for (int i = 1; i < k; ++i) dpow *= bg.onsite;
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y) {
            const BigInt expected = BigInt(reg[x]) * reg[y] * dpow;
            if (power[x][y] != expected) rep.pass = false;
            rep.lhs_total += expected * expected;
        }
    rep.bound = 1;
    for (int i = 0; i < 2 * (k + 1); ++i) rep.bound *= bg.onsite;
    if (rep.lhs_total > rep.bound) rep.pass = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Pauli window for Kramers-Wannier: words in the symplectic representation
// over GF(2), commutation given by the symplectic form.
// ---------------------------------------------------------------------------

struct PauliWord {
    int sites = 0;
    std::vector<std::uint8_t> x; // x-part, one bit per site
    std::vector<std::uint8_t> z; // z-part

    static PauliWord sigma_x(int sites, int i) {
        PauliWord w{sites, std::vector<std::uint8_t>(sites, 0),
                    std::vector<std::uint8_t>(sites, 0)};
        w.x[i] = 1;
        return w;
    }
    static PauliWord sigma_zz(int sites, int i) { // sigma^z_i sigma^z_{i+1}
        PauliWord w{sites, std::vector<std::uint8_t>(sites, 0),
                    std::vector<std::uint8_t>(sites, 0)};
        w.z[i] = 1;
        w.z[i + 1] = 1;
        return w;
    }
};

// 1 when the words anticommute
inline int symplectic_form(const PauliWord& a, const PauliWord& b) {
    int s = 0;
    for (int i = 0; i < a.sites; ++i) s ^= (a.x[i] & b.z[i]) ^ (a.z[i] & b.x[i]);
    return s;
}

struct PauliKwReport {
    bool pass = true;
    int sites = 0;
    int pairs_checked = 0;
};

/// Kramers-Wannier on the Pauli generators of the symmetric algebra:
/// sigma^x_i -> sigma^z_{i-1} sigma^z_i and sigma^z_i sigma^z_{i+1} -> sigma^x_i.
/// Images truncated by the window boundary are dropped; the symplectic form
/// must agree on every surviving generator pair.
inline PauliKwReport pauli_kw_check(int n) {
    if (n < 3) throw WindowTooSmall("Pauli window needs n >= 3");

    struct Gen {
        PauliWord word;
        bool has_image;
        PauliWord image;
    };
    std::vector<Gen> gens;
    for (int i = 0; i < n; ++i) {
        Gen g{PauliWord::sigma_x(n, i), i >= 1,
              i >= 1 ? PauliWord::sigma_zz(n, i - 1) : PauliWord{}};
        gens.push_back(std::move(g));
    }
    for (int i = 0; i + 1 < n; ++i)
        gens.push_back({PauliWord::sigma_zz(n, i), true, PauliWord::sigma_x(n, i)});

    PauliKwReport rep;
    rep.sites = n;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (!gens[a].has_image || !gens[b].has_image) continue;
            ++rep.pairs_checked;
            if (symplectic_form(gens[a].word, gens[b].word) !=
                symplectic_form(gens[a].image, gens[b].image))
                rep.pass = false;
        }
    return rep;
}

} // namespace fusioncat
