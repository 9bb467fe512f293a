#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fusioncat/errors.hpp"

namespace fusioncat {

using BigInt = boost::multiprecision::cpp_int;

enum class FiberFunctor { Yes, No, Unknown };

inline const char* to_string(FiberFunctor f) {
    switch (f) {
        case FiberFunctor::Yes: return "yes";
        case FiberFunctor::No: return "no";
        default: return "unknown";
    }
}

/// Fusion ring of a unitary fusion category: non-negative integer structure
/// constants N^Z_{XY} on a finite label set, with unit and dual involution.
/// Values are immutable after construction.
class FusionRing {
public:
    FusionRing(std::string name, std::vector<std::string> labels, std::size_t unit,
               std::vector<std::size_t> dual, std::vector<int> fusion,
               FiberFunctor fiber = FiberFunctor::Unknown)
        : name_(std::move(name)),
          labels_(std::move(labels)),
          unit_(unit),
          dual_(std::move(dual)),
          fusion_(std::move(fusion)),
          fiber_(fiber) {
        const std::size_t r = labels_.size();
        if (r == 0) throw MalformedRing("ring needs at least one label");
        if (r > kMaxRank)
            throw MalformedRing("rank " + std::to_string(r) + " exceeds dense-tensor limit");
        if (fusion_.size() != r * r * r)
            throw MalformedRing("fusion tensor size does not match rank^3");
        if (unit_ >= r) throw MalformedRing("unit index out of range");
        if (dual_.size() != r) throw MalformedRing("dual permutation length does not match rank");
        std::vector<bool> seen(r, false);
        for (std::size_t x : dual_) {
            if (x >= r || seen[x]) throw MalformedRing("dual is not a permutation");
            seen[x] = true;
        }
        for (int m : fusion_)
            if (m < 0) throw MalformedRing("negative fusion multiplicity");
    }

    static constexpr std::size_t kMaxRank = 64;

    const std::string& name() const noexcept { return name_; }
    std::size_t rank() const noexcept { return labels_.size(); }
    std::size_t unit() const noexcept { return unit_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(std::size_t x) const { return labels_.at(x); }
    std::size_t dual(std::size_t x) const { return dual_.at(x); }
    FiberFunctor fiber_flag() const noexcept { return fiber_; }

    // N^Z_{XY}
    int n(std::size_t x, std::size_t y, std::size_t z) const {
        return fusion_[(x * rank() + y) * rank() + z];
    }

    const std::vector<int>& tensor() const noexcept { return fusion_; }

    std::size_t label_index(const std::string& name) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == name) return i;
        throw LabelOutOfRange("no label named '" + name + "' in ring " + name_);
    }

    FusionRing with_fiber_flag(FiberFunctor f) const {
        return FusionRing(name_, labels_, unit_, dual_, fusion_, f);
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::size_t unit_;
    std::vector<std::size_t> dual_;
    std::vector<int> fusion_; // dense, index (x*rank + y)*rank + z
    FiberFunctor fiber_;
};

struct VerificationReport {
    bool pass = true;
    std::string axiom;                  // empty when pass
    std::array<std::size_t, 4> witness{}; // indices relevant to the violated axiom
    std::string detail;

    explicit operator bool() const noexcept { return pass; }
};

/// Checks the four fusion-ring axioms, reporting the first violation found.
inline VerificationReport verify_ring(const FusionRing& ring) {
    const std::size_t r = ring.rank();
    const std::size_t e = ring.unit();
    auto fail = [](std::string axiom, std::array<std::size_t, 4> w, std::string detail) {
        return VerificationReport{false, std::move(axiom), w, std::move(detail)};
    };

    // unit: N^Z_{1Y} = delta_{Y,Z} and N^Z_{X1} = delta_{X,Z}
    for (std::size_t y = 0; y < r; ++y)
        for (std::size_t z = 0; z < r; ++z) {
            if (ring.n(e, y, z) != (y == z ? 1 : 0))
                return fail("unit", {e, y, z, 0}, "N^Z_{1Y} != delta");
            if (ring.n(y, e, z) != (y == z ? 1 : 0))
                return fail("unit", {y, e, z, 0}, "N^Z_{X1} != delta");
        }

    // duality: N^1_{XY} = delta_{Y,Xbar}, and dual is an involution
    for (std::size_t x = 0; x < r; ++x) {
        if (ring.dual(ring.dual(x)) != x)
            return fail("duality", {x, ring.dual(x), 0, 0}, "dual not an involution");
        for (std::size_t y = 0; y < r; ++y)
            if (ring.n(x, y, e) != (y == ring.dual(x) ? 1 : 0))
                return fail("duality", {x, y, 0, 0}, "N^1_{XY} != delta_{Y,Xbar}");
    }

    // Frobenius reciprocity: N^Z_{XY} = N^Y_{Xbar Z} = N^X_{Z Ybar}
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y)
            for (std::size_t z = 0; z < r; ++z) {
                const int m = ring.n(x, y, z);
                if (ring.n(ring.dual(x), z, y) != m || ring.n(z, ring.dual(y), x) != m)
                    return fail("frobenius", {x, y, z, 0}, "Frobenius reciprocity violated");
            }

    // associativity: sum_E N^E_{XY} N^W_{EZ} = sum_F N^W_{XF} N^F_{YZ}
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y)
            for (std::size_t z = 0; z < r; ++z)
                for (std::size_t w = 0; w < r; ++w) {
                    long long lhs = 0, rhs = 0;
                    for (std::size_t m = 0; m < r; ++m) {
                        lhs += static_cast<long long>(ring.n(x, y, m)) * ring.n(m, z, w);
                        rhs += static_cast<long long>(ring.n(x, m, w)) * ring.n(y, z, m);
                    }
                    if (lhs != rhs)
                        return fail("associativity", {x, y, z, w},
                                    "(X Y) Z and X (Y Z) disagree at W");
                }

    return VerificationReport{};
}

struct DimensionVector {
    std::vector<double> values;
    std::optional<std::vector<long long>> exact_integers; // set when all entries round

    double total() const {
        double s = 0;
        for (double d : values) s += d * d;
        return s;
    }
};

/// Frobenius-Perron dimensions: the strictly positive common eigenvector of
/// the fusion matrices, normalized at the unit. Power iteration on the total
/// fusion matrix to 1e-12 relative tolerance, then a Rayleigh refinement per
/// object.
inline DimensionVector fp_dimensions(const FusionRing& ring) {
    if (auto rep = verify_ring(ring); !rep)
        throw NonVerifiedRing("fp_dimensions on a ring violating axiom '" + rep.axiom + "'");
    const std::size_t r = ring.rank();

    // total fusion action T_{YZ} = sum_X N^Z_{XY}; strictly positive for a
    // fusion ring, so power iteration converges to the PF eigenvector.
    std::vector<double> total(r * r, 0.0);
    for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y)
            for (std::size_t z = 0; z < r; ++z)
                total[y * r + z] += ring.n(x, y, z);

    std::vector<double> v(r, 1.0), w(r, 0.0);
    for (int iter = 0; iter < 20000; ++iter) {
        for (std::size_t y = 0; y < r; ++y) {
            double s = 0;
            for (std::size_t z = 0; z < r; ++z) s += total[y * r + z] * v[z];
            w[y] = s;
        }
        const double scale = w[ring.unit()];
        double delta = 0;
        for (std::size_t y = 0; y < r; ++y) {
            w[y] /= scale;
            delta = std::max(delta, std::abs(w[y] - v[y]) / w[y]);
        }
        v.swap(w);
        if (delta < 1e-13) break;
    }

    // d(X) = v^T N_X v / v^T v, exact on the common PF eigenvector.
    double vv = 0;
    for (double d : v) vv += d * d;
    DimensionVector out;
    out.values.resize(r);
    for (std::size_t x = 0; x < r; ++x) {
        double s = 0;
        for (std::size_t y = 0; y < r; ++y)
            for (std::size_t z = 0; z < r; ++z)
                s += v[y] * ring.n(x, y, z) * v[z];
        out.values[x] = s / vv;
    }

    std::vector<long long> ints(r);
    bool integral = true;
    for (std::size_t x = 0; x < r; ++x) {
        const double rounded = std::nearbyint(out.values[x]);
        if (std::abs(out.values[x] - rounded) <= 1e-6 && rounded >= 1.0)
            ints[x] = static_cast<long long>(rounded);
        else
            integral = false;
    }
    if (integral) out.exact_integers = std::move(ints);
    return out;
}

struct IntegralityVerdict {
    bool integral = false;
    std::vector<std::size_t> nonintegral_labels;
    std::vector<double> nonintegral_values;
    std::optional<std::vector<long long>> integer_dims;
};

/// Integrality of all FP dimensions within 1e-6 of a positive integer.
inline IntegralityVerdict is_integral(const FusionRing& ring) {
    const DimensionVector dims = fp_dimensions(ring);
    IntegralityVerdict v;
    for (std::size_t x = 0; x < ring.rank(); ++x) {
        const double d = dims.values[x];
        if (std::abs(d - std::nearbyint(d)) > 1e-6) {
            v.nonintegral_labels.push_back(x);
            v.nonintegral_values.push_back(d);
        }
    }
    v.integral = v.nonintegral_labels.empty();
    if (v.integral) v.integer_dims = dims.exact_integers;
    return v;
}

/// One right-fusion step: starting from multiplicities `vec`, fuse with the
/// simple object X on the right.
inline std::vector<BigInt> apply_fusion(const FusionRing& ring, const std::vector<BigInt>& vec,
                                        std::size_t x) {
    const std::size_t r = ring.rank();
    if (x >= r) throw LabelOutOfRange("label index " + std::to_string(x));
    if (vec.size() != r) throw MalformedRing("multiplicity vector length mismatch");
    std::vector<BigInt> out(r, 0);
    for (std::size_t y = 0; y < r; ++y) {
        if (vec[y] == 0) continue;
        for (std::size_t z = 0; z < r; ++z) {
            const int m = ring.n(y, x, z);
            if (m) out[z] += vec[y] * m;
        }
    }
    return out;
}

/// Multiplicity of each simple in the ordered tensor product of `word`.
inline std::vector<BigInt> tensor_multiplicities(const FusionRing& ring,
                                                 const std::vector<std::size_t>& word) {
    if (word.empty()) throw LabelOutOfRange("empty tensor word");
    std::vector<BigInt> vec(ring.rank(), 0);
    vec[ring.unit()] = 1;
    for (std::size_t x : word) vec = apply_fusion(ring, vec, x);
    return vec;
}

/// The regular element: the integer dimension vector (d_X)_X. Satisfies
/// [R].[Y] = d_Y [R] entrywise in exact integers.
inline std::vector<long long> regular_object(const FusionRing& ring) {
    const IntegralityVerdict v = is_integral(ring);
    if (!v.integral) {
        std::ostringstream msg;
        msg << "ring " << ring.name() << " has non-integral dimension at label "
            << ring.label(v.nonintegral_labels.front());
        throw NonIntegralRing(msg.str());
    }
    return *v.integer_dims;
}

// ---------------------------------------------------------------------------
// Text file format (line oriented, whitespace separated):
//   ring <name>
//   labels <l0> <l1> ...
//   unit <index>
//   dual <p0> <p1> ...
//   N <X> <Y> <Z> <mult>      (sparse; absent entries are zero)
// Lines starting with '#' are comments.
// ---------------------------------------------------------------------------

inline FusionRing read_ring(std::istream& in) {
    std::string name;
    std::vector<std::string> labels;
    std::optional<std::size_t> unit;
    std::vector<std::size_t> dual;
    std::vector<int> fusion;
    std::set<std::array<std::size_t, 3>> seen;
    bool have_labels = false, have_dual = false;

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        auto bad = [&](const std::string& why) {
            throw MalformedRing("line " + std::to_string(lineno) + ": " + why);
        };
        if (key == "ring") {
            if (!(ls >> name)) bad("missing ring name");
        } else if (key == "labels") {
            std::string l;
            while (ls >> l) labels.push_back(l);
            if (labels.empty()) bad("empty label list");
            have_labels = true;
        } else if (key == "unit") {
            std::size_t u;
            if (!(ls >> u)) bad("missing unit index");
            unit = u;
        } else if (key == "dual") {
            std::size_t d;
            while (ls >> d) dual.push_back(d);
            have_dual = true;
        } else if (key == "N") {
            if (!have_labels) bad("N entry before labels line");
            std::size_t x, y, z;
            int m;
            if (!(ls >> x >> y >> z >> m)) bad("malformed N entry");
            const std::size_t r = labels.size();
            if (x >= r || y >= r || z >= r) bad("N indices out of range");
            if (!seen.insert({x, y, z}).second) bad("duplicate N entry");
            if (fusion.empty()) fusion.assign(r * r * r, 0);
            fusion[(x * r + y) * r + z] = m;
        } else {
            bad("unknown directive '" + key + "'");
        }
    }
    if (name.empty() || !have_labels || !unit || !have_dual)
        throw MalformedRing("ring file missing one of: ring, labels, unit, dual");
    if (fusion.empty()) fusion.assign(labels.size() * labels.size() * labels.size(), 0);
    return FusionRing(name, labels, *unit, dual, fusion);
}

inline void write_ring(const FusionRing& ring, std::ostream& out) {
    out << "ring " << ring.name() << "\n";
    out << "labels";
    for (const auto& l : ring.labels()) out << " " << l;
    out << "\nunit " << ring.unit() << "\ndual";
    for (std::size_t x = 0; x < ring.rank(); ++x) out << " " << ring.dual(x);
    out << "\n";
    for (std::size_t x = 0; x < ring.rank(); ++x)
        for (std::size_t y = 0; y < ring.rank(); ++y)
            for (std::size_t z = 0; z < ring.rank(); ++z)
                if (int m = ring.n(x, y, z))
                    out << "N " << x << " " << y << " " << z << " " << m << "\n";
}

} // namespace fusioncat
