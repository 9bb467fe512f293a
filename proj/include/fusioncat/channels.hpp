#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "fusioncat/errors.hpp"
#include "fusioncat/fusion_ring.hpp"
#include "fusioncat/rational.hpp"

namespace fusioncat {

/// Point of the symmetry simplex: a convex combination of the channels
/// lambda_X. Carries an exact rational track whenever the ring is integral.
struct ChannelCombo {
    const FusionRing* ring = nullptr;
    std::vector<double> coeff;                       // one per label, sums to 1
    std::optional<std::vector<Rational>> exact;      // set for integral rings

    double at(std::size_t x) const { return coeff[x]; }
};

namespace detail {

// shared dimension data for a ring; exact integer dims when available
struct ChannelContext {
    std::vector<double> dims;
    std::optional<std::vector<long long>> int_dims;

    explicit ChannelContext(const FusionRing& ring) {
        const DimensionVector d = fp_dimensions(ring);
        dims = d.values;
        int_dims = d.exact_integers;
    }
};

} // namespace detail

/// lambda_X lambda_Y = sum_Z (d_Z / (d_X d_Y)) N^Z_{XY} lambda_Z.
inline ChannelCombo lambda_compose(const FusionRing& ring, std::size_t x, std::size_t y) {
    if (x >= ring.rank() || y >= ring.rank())
        throw LabelOutOfRange("channel label out of range");
    const detail::ChannelContext ctx(ring);

    ChannelCombo out;
    out.ring = &ring;
    out.coeff.assign(ring.rank(), 0.0);
    for (std::size_t z = 0; z < ring.rank(); ++z)
        out.coeff[z] = ctx.dims[z] * ring.n(x, y, z) / (ctx.dims[x] * ctx.dims[y]);

    if (ctx.int_dims) {
        std::vector<Rational> exact(ring.rank());
        const auto& di = *ctx.int_dims;
        for (std::size_t z = 0; z < ring.rank(); ++z)
            exact[z] = Rational(di[z] * ring.n(x, y, z), di[x] * di[y]);
        out.exact = std::move(exact);
    }
    return out;
}

/// The vertex lambda_X itself.
inline ChannelCombo lambda_channel(const FusionRing& ring, std::size_t x) {
    if (x >= ring.rank()) throw LabelOutOfRange("channel label out of range");
    ChannelCombo out;
    out.ring = &ring;
    out.coeff.assign(ring.rank(), 0.0);
    out.coeff[x] = 1.0;
    if (is_integral(ring).integral) {
        std::vector<Rational> exact(ring.rank());
        exact[x] = Rational(1);
        out.exact = std::move(exact);
    }
    return out;
}

/// Bilinear extension of lambda_compose to convex combinations.
inline ChannelCombo combo_compose(const ChannelCombo& a, const ChannelCombo& b) {
    if (a.ring != b.ring) throw RingMismatch("channel combos live over different rings");
    const FusionRing& ring = *a.ring;
    const detail::ChannelContext ctx(ring);

    ChannelCombo out;
    out.ring = &ring;
    out.coeff.assign(ring.rank(), 0.0);
    for (std::size_t x = 0; x < ring.rank(); ++x) {
        if (a.coeff[x] == 0.0) continue;
        for (std::size_t y = 0; y < ring.rank(); ++y) {
            if (b.coeff[y] == 0.0) continue;
            const double w = a.coeff[x] * b.coeff[y] / (ctx.dims[x] * ctx.dims[y]);
            for (std::size_t z = 0; z < ring.rank(); ++z)
                out.coeff[z] += w * ctx.dims[z] * ring.n(x, y, z);
        }
    }

    if (a.exact && b.exact && ctx.int_dims) {
        const auto& di = *ctx.int_dims;
        std::vector<Rational> exact(ring.rank());
        for (std::size_t x = 0; x < ring.rank(); ++x) {
            if ((*a.exact)[x].is_zero()) continue;
            for (std::size_t y = 0; y < ring.rank(); ++y) {
                if ((*b.exact)[y].is_zero()) continue;
                const Rational w = (*a.exact)[x] * (*b.exact)[y] / Rational(di[x] * di[y]);
                for (std::size_t z = 0; z < ring.rank(); ++z)
                    if (int m = ring.n(x, y, z))
                        exact[z] = exact[z] + w * Rational(di[z] * m);
            }
        }
        out.exact = std::move(exact);
    }
    return out;
}

/// E = sum_X (d_X^2 / Dim) lambda_X, the projection onto symmetric operators.
/// Absorbs every lambda_X on either side and is idempotent.
inline ChannelCombo conditional_expectation(const FusionRing& ring) {
    const detail::ChannelContext ctx(ring);
    ChannelCombo out;
    out.ring = &ring;
    out.coeff.assign(ring.rank(), 0.0);
    double dim = 0;
    for (double d : ctx.dims) dim += d * d;
    for (std::size_t x = 0; x < ring.rank(); ++x)
        out.coeff[x] = ctx.dims[x] * ctx.dims[x] / dim;

    if (ctx.int_dims) {
        const auto& di = *ctx.int_dims;
        long long idim = 0;
        for (long long d : di) idim += d * d;
        std::vector<Rational> exact(ring.rank());
        for (std::size_t x = 0; x < ring.rank(); ++x) exact[x] = Rational(di[x] * di[x], idim);
        out.exact = std::move(exact);
    }
    return out;
}

} // namespace fusioncat
