#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fusioncat/errors.hpp"
#include "fusioncat/rational.hpp"

namespace fusioncat {

/// Finite abelian group as a product of cyclic factors; elements are residue
/// tuples, arithmetic componentwise.
struct AbelianGroup {
    std::vector<int> factors; // empty = trivial group

    using Elem = std::vector<int>;

    std::size_t order() const {
        std::size_t n = 1;
        for (int m : factors) n *= static_cast<std::size_t>(m);
        return n;
    }

    int exponent() const {
        int e = 1;
        for (int m : factors) e = std::lcm(e, m);
        return e;
    }

    Elem zero() const { return Elem(factors.size(), 0); }

    Elem add(const Elem& a, const Elem& b) const {
        Elem c(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) c[i] = (a[i] + b[i]) % factors[i];
        return c;
    }

    Elem neg(const Elem& a) const {
        Elem c(factors.size());
        for (std::size_t i = 0; i < factors.size(); ++i) c[i] = (factors[i] - a[i]) % factors[i];
        return c;
    }

    std::vector<Elem> elements() const {
        std::vector<Elem> out;
        out.reserve(order());
        Elem e = zero();
        out.push_back(e);
        while (true) {
            std::size_t i = factors.size();
            while (i-- > 0) {
                if (++e[i] < factors[i]) break;
                e[i] = 0;
                if (i == 0) return out;
            }
            if (factors.empty()) return out;
            out.push_back(e);
        }
    }

    // subgroup generated by `gens`, as a canonically sorted element list
    std::vector<Elem> closure(const std::vector<Elem>& gens) const {
        std::set<Elem> seen{zero()};
        std::vector<Elem> queue{zero()};
        while (!queue.empty()) {
            const Elem cur = queue.back();
            queue.pop_back();
            for (const Elem& g : gens) {
                Elem nxt = add(cur, g);
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
        }
        return {seen.begin(), seen.end()};
    }
};

/// Parses the CLI group grammar: "Z/n" or products like "Z/2 x Z/2" / "Z/2xZ/2".
inline AbelianGroup parse_group_spec(const std::string& spec) {
    AbelianGroup g;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        while (pos < spec.size() && (spec[pos] == ' ' || spec[pos] == 'x')) ++pos;
        if (pos >= spec.size()) break;
        if (spec.compare(pos, 2, "Z/") != 0)
            throw UnknownName("cannot parse group spec '" + spec + "'");
        pos += 2;
        std::size_t end = pos;
        while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
        if (end == pos) throw UnknownName("cannot parse group spec '" + spec + "'");
        g.factors.push_back(std::stoi(spec.substr(pos, end - pos)));
        pos = end;
    }
    if (g.factors.empty()) throw UnknownName("empty group spec '" + spec + "'");
    for (int m : g.factors)
        if (m < 1) throw UnknownName("group factor must be >= 1");
    return g;
}

/// The anyons of the double of a pointed category: the group Ghat x G with the
/// pairing quadratic form q((a,g)) = sum_i a_i g_i / m_i in Q/Z. Elements are
/// residue tuples with the Ghat block first.
class MetricGroup {
public:
    using Elem = AbelianGroup::Elem;

    explicit MetricGroup(AbelianGroup g) : base_(std::move(g)) {
        full_.factors = base_.factors;
        full_.factors.insert(full_.factors.end(), base_.factors.begin(), base_.factors.end());
    }

    const AbelianGroup& base() const noexcept { return base_; }   // G
    const AbelianGroup& group() const noexcept { return full_; }  // Ghat x G
    std::size_t order() const { return full_.order(); }

    Rational q(const Elem& x) const {
        const std::size_t t = base_.factors.size();
        Rational v;
        for (std::size_t i = 0; i < t; ++i)
            v = v + Rational(static_cast<std::int64_t>(x[i]) * x[t + i], base_.factors[i]);
        return v.mod1();
    }

    // b(x,y) = q(x+y) - q(x) - q(y), the associated nondegenerate pairing
    Rational bilinear(const Elem& x, const Elem& y) const {
        return (q(full_.add(x, y)) - q(x) - q(y)).mod1();
    }

    friend bool operator==(const MetricGroup& a, const MetricGroup& b) {
        return a.base_.factors == b.base_.factors;
    }

private:
    AbelianGroup base_;
    AbelianGroup full_;
};

struct Subgroup {
    std::vector<AbelianGroup::Elem> elements;   // canonically sorted
    std::vector<AbelianGroup::Elem> generators; // one possible generating list
};

struct Lagrangian {
    Subgroup subgroup;
    std::size_t order = 0;
    std::vector<int> parent_factors; // factors of the ambient Ghat x G

    friend bool operator==(const Lagrangian& a, const Lagrangian& b) {
        return a.subgroup.elements == b.subgroup.elements;
    }
    friend bool operator<(const Lagrangian& a, const Lagrangian& b) {
        return a.subgroup.elements < b.subgroup.elements;
    }
};

inline MetricGroup center_of_pointed(const AbelianGroup& g) { return MetricGroup(g); }

/// All subgroups L with |L| = |G| and q vanishing on L, in canonical order.
/// Breadth-first closure over isotropic elements: a candidate x extends the
/// current subgroup only if q(x) = 0 and b(x, .) vanishes on it, which keeps
/// every generated subgroup isotropic.
inline std::vector<Lagrangian> enumerate_lagrangians(const MetricGroup& m) {
    if (m.order() > 10000)
        throw GroupTooLarge("metric group of order " + std::to_string(m.order()) +
                            " exceeds the enumeration bound");
    const std::size_t target = m.base().order(); // sqrt of |Ghat x G|

    std::vector<AbelianGroup::Elem> isotropic;
    for (const auto& x : m.group().elements())
        if (m.q(x).is_zero()) isotropic.push_back(x);

    std::set<std::vector<AbelianGroup::Elem>> seen;
    std::vector<Subgroup> frontier;
    Subgroup trivial{{m.group().zero()}, {}};
    seen.insert(trivial.elements);
    frontier.push_back(trivial);

    std::vector<Lagrangian> found;
    if (target == 1) found.push_back({trivial, 1, m.group().factors});

    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const Subgroup& s : frontier) {
            if (s.elements.size() >= target) continue;
            for (const auto& x : isotropic) {
                if (std::binary_search(s.elements.begin(), s.elements.end(), x)) continue;
                bool nullp = true;
                for (const auto& el : s.elements)
                    if (!m.bilinear(x, el).is_zero()) { nullp = false; break; }
                if (!nullp) continue;
                Subgroup grown;
                grown.generators = s.generators;
                grown.generators.push_back(x);
                grown.elements = m.group().closure(grown.generators);
                if (grown.elements.size() > target) continue;
                if (!seen.insert(grown.elements).second) continue;
                if (grown.elements.size() == target)
                    found.push_back({grown, target, m.group().factors});
                else
                    next.push_back(grown);
            }
        }
        frontier.swap(next);
    }

    std::sort(found.begin(), found.end());
    return found;
}

/// Antisymmetric bicharacter on a subgroup H presented by independent
/// generators of orders n_i: the table entry (i,j) is the exponent of
/// b(g_i, g_j) in Q/Z.
struct Bicharacter {
    std::vector<int> orders;       // generator orders n_i
    std::vector<Rational> table;   // row-major, orders.size()^2

    static Bicharacter trivial(const std::vector<int>& orders) {
        return {orders, std::vector<Rational>(orders.size() * orders.size())};
    }

    const Rational& at(std::size_t i, std::size_t j) const { return table[i * orders.size() + j]; }

    void validate() const {
        const std::size_t r = orders.size();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const Rational v = at(i, j).mod1();
                if (!(v * Rational(orders[i])).mod1().is_zero() ||
                    !(v * Rational(orders[j])).mod1().is_zero())
                    throw NotBicharacter("value at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ") breaks the order condition");
            }
        for (std::size_t i = 0; i < r; ++i)
            if (!at(i, i).mod1().is_zero())
                throw NotAntisymmetric("b(g,g) != 1 at generator " + std::to_string(i));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (!(at(i, j) + at(j, i)).mod1().is_zero())
                    throw NotAntisymmetric("b(h,k) b(k,h) != 1 at (" + std::to_string(i) + "," +
                                           std::to_string(j) + ")");
    }
};

/// All antisymmetric bicharacter tables on generator orders n_1..n_r (r <= 3).
inline std::vector<Bicharacter> enumerate_antisymmetric_bicharacters(
    const std::vector<int>& orders) {
    if (orders.size() > 3)
        throw GroupTooLarge("bicharacter enumeration supports at most 3 cyclic factors");
    const std::size_t r = orders.size();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) slots.emplace_back(i, j);

    std::vector<Bicharacter> out;
    std::vector<int> choice(slots.size(), 0);
    while (true) {
        Bicharacter b = Bicharacter::trivial(orders);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto [i, j] = slots[s];
            const int g = std::gcd(orders[i], orders[j]);
            b.table[i * r + j] = Rational(choice[s], g).mod1();
            b.table[j * r + i] = (-Rational(choice[s], g)).mod1();
        }
        b.validate();
        out.push_back(std::move(b));
        std::size_t s = 0;
        for (; s < slots.size(); ++s) {
            const auto [i, j] = slots[s];
            if (++choice[s] < std::gcd(orders[i], orders[j])) break;
            choice[s] = 0;
        }
        if (s == slots.size()) break;
    }
    return out;
}

/// L_{(H,b)} = {(phi, h) : h in H, phi restricting on H to b(h, .)}. For
/// cyclic G the only antisymmetric b is trivial and L = Hperp x H.
inline Lagrangian lagrangian_from_pair(const MetricGroup& m,
                                       const std::vector<AbelianGroup::Elem>& h_generators,
                                       const Bicharacter& b) {
    b.validate();
    const AbelianGroup& g = m.base();
    const std::size_t t = g.factors.size();

    std::vector<AbelianGroup::Elem> gens =
        h_generators.empty() ? std::vector<AbelianGroup::Elem>{g.zero()} : h_generators;
    if (!h_generators.empty() && b.orders.size() != gens.size())
        throw NotBicharacter("bicharacter table size does not match the generator count");

    // generator orders inside G
    std::vector<int> orders;
    for (const auto& gen : gens) {
        int ord = 1;
        AbelianGroup::Elem cur = gen;
        while (cur != g.zero()) { cur = g.add(cur, gen); ++ord; }
        orders.push_back(ord);
    }
    if (!h_generators.empty() && orders != b.orders)
        throw NotBicharacter("bicharacter orders do not match the generator orders in G");
    // trivial H carries only the trivial bicharacter
    const Bicharacter beff = h_generators.empty() ? Bicharacter::trivial(orders) : b;

    // exponent tuples -> elements of H; requires an independent generating list
    // whenever b is nontrivial
    std::map<AbelianGroup::Elem, std::vector<int>> exponents;
    std::vector<int> exp(gens.size(), 0);
    while (true) {
        AbelianGroup::Elem el = g.zero();
        for (std::size_t i = 0; i < gens.size(); ++i)
            for (int k = 0; k < exp[i]; ++k) el = g.add(el, gens[i]);
        const bool fresh = exponents.emplace(el, exp).second;
        if (!fresh) {
            bool b_trivial = true;
            for (const auto& v : beff.table)
                if (!v.mod1().is_zero()) b_trivial = false;
            if (!b_trivial)
                throw NotBicharacter("generators are not independent; table is ambiguous");
        }
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++exp[i] < orders[i]) break;
            exp[i] = 0;
        }
        if (i == gens.size()) break;
    }

    std::vector<AbelianGroup::Elem> lag_elements;
    for (const auto& [h, hexp] : exponents) {
        // the character H -> Q/Z that phi must restrict to: gamma_i = b(h, g_i)
        std::vector<Rational> gamma(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Rational v;
            for (std::size_t j = 0; j < gens.size(); ++j)
                v = v + Rational(hexp[j]) * beff.at(j, i);
            gamma[i] = v.mod1();
        }
        for (const auto& c : g.elements()) {
            bool match = true;
            for (std::size_t i = 0; i < gens.size() && match; ++i) {
                Rational chi;
                for (std::size_t d = 0; d < t; ++d)
                    chi = chi + Rational(static_cast<std::int64_t>(c[d]) * gens[i][d],
                                         g.factors[d]);
                if (chi.mod1() != gamma[i]) match = false;
            }
            if (!match) continue;
            AbelianGroup::Elem full = c;
            full.insert(full.end(), h.begin(), h.end());
            lag_elements.push_back(std::move(full));
        }
    }
    std::sort(lag_elements.begin(), lag_elements.end());

    Lagrangian out;
    out.subgroup.elements = lag_elements;
    out.subgroup.generators = {};
    out.order = lag_elements.size();
    out.parent_factors = m.group().factors;
    if (out.order != g.order())
        throw NotBicharacter("pair does not produce a subgroup of order |G|");
    for (const auto& x : lag_elements)
        if (!m.q(x).is_zero())
            throw NotBicharacter("pair produces a non-isotropic element");
    return out;
}

/// q-preserving automorphism of a metric group, as an integer matrix acting on
/// residue tuples.
struct CenterAutomorphism {
    std::vector<std::vector<int>> matrix; // (2t) x (2t)
    int order = 0;

    AbelianGroup::Elem apply(const AbelianGroup& full, const AbelianGroup::Elem& x) const {
        const std::size_t n = full.factors.size();
        AbelianGroup::Elem y(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            long long s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += static_cast<long long>(matrix[i][j]) * x[j];
            y[i] = static_cast<int>(((s % full.factors[i]) + full.factors[i]) % full.factors[i]);
        }
        return y;
    }
};

namespace detail {

inline int mod_inverse(int s, int n) {
    int t = 0, newt = 1, r = n, newr = ((s % n) + n) % n;
    while (newr != 0) {
        const int quot = r / newr;
        t = std::exchange(newt, t - quot * newt);
        r = std::exchange(newr, r - quot * newr);
    }
    if (r != 1) throw NonCoprime("no inverse of " + std::to_string(s) + " mod " + std::to_string(n));
    return ((t % n) + n) % n;
}

inline void check_q_preserving(const MetricGroup& m, const CenterAutomorphism& phi) {
    for (const auto& x : m.group().elements())
        if (m.q(phi.apply(m.group(), x)) != m.q(x))
            throw NotQPreserving("automorphism does not preserve q");
}

inline int automorphism_order(const MetricGroup& m, const CenterAutomorphism& phi) {
    const auto elems = m.group().elements();
    std::vector<AbelianGroup::Elem> cur = elems;
    for (int ord = 1; ord <= static_cast<int>(m.order()) + 1; ++ord) {
        bool identity = true;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            cur[i] = phi.apply(m.group(), cur[i]);
            if (cur[i] != elems[i]) identity = false;
        }
        if (identity) return ord;
    }
    throw NotQPreserving("automorphism order exceeds the group order; not a bijection");
}

} // namespace detail

/// The duality induced on the center of Vec(Z/n) by the Tambara-Yamagami
/// shift with beta(a,b) = exp(2 pi i s a b / n): (a,g) -> (s g, s^{-1} a).
inline CenterAutomorphism ty_duality_auto(const MetricGroup& m, int s) {
    if (m.base().factors.size() != 1)
        throw NonCyclicGroup("TY duality requires a cyclic base group");
    const int n = m.base().factors[0];
    const int smod = ((s % n) + n) % n;
    if (std::gcd(smod, n) != 1)
        throw NonCoprime("s = " + std::to_string(s) + " is not invertible mod " +
                         std::to_string(n));
    const int sinv = detail::mod_inverse(smod, n);

    CenterAutomorphism phi;
    phi.matrix = {{0, smod}, {sinv, 0}};
    detail::check_q_preserving(m, phi);
    phi.order = detail::automorphism_order(m, phi);
    return phi;
}

struct AnomalyVerdict {
    bool anomalous = false;
    std::vector<Lagrangian> lagrangians;              // canonical list
    std::vector<std::size_t> fixed;                   // indices of fixed Lagrangians
    std::vector<std::vector<std::size_t>> orbits;     // index partition
};

/// Orbit partition of the Lagrangian set under phi; anomalous iff no
/// singleton orbit.
inline AnomalyVerdict anomaly_verdict(const MetricGroup& m, const CenterAutomorphism& phi) {
    detail::check_q_preserving(m, phi);

    AnomalyVerdict v;
    v.lagrangians = enumerate_lagrangians(m);

    std::map<std::vector<AbelianGroup::Elem>, std::size_t> index;
    for (std::size_t i = 0; i < v.lagrangians.size(); ++i)
        index[v.lagrangians[i].subgroup.elements] = i;

    std::vector<std::size_t> image(v.lagrangians.size());
    for (std::size_t i = 0; i < v.lagrangians.size(); ++i) {
        std::vector<AbelianGroup::Elem> mapped;
        for (const auto& x : v.lagrangians[i].subgroup.elements)
            mapped.push_back(phi.apply(m.group(), x));
        std::sort(mapped.begin(), mapped.end());
        const auto it = index.find(mapped);
        if (it == index.end())
            throw NotQPreserving("image of a Lagrangian is not Lagrangian");
        image[i] = it->second;
    }

    std::vector<bool> visited(v.lagrangians.size(), false);
    for (std::size_t i = 0; i < v.lagrangians.size(); ++i) {
        if (visited[i]) continue;
        std::vector<std::size_t> orbit;
        std::size_t cur = i;
        while (!visited[cur]) {
            visited[cur] = true;
            orbit.push_back(cur);
            cur = image[cur];
        }
        if (orbit.size() == 1) v.fixed.push_back(orbit.front());
        v.orbits.push_back(std::move(orbit));
    }
    v.anomalous = v.fixed.empty();
    return v;
}

/// A fixed point is forced by orbit counting for a prime-order action.
inline bool orbit_fixed_point_forced(long long count, long long action_order) {
    if (action_order < 2) throw NonPrimeOrder("action order must be a prime");
    for (long long d = 2; d * d <= action_order; ++d)
        if (action_order % d == 0)
            throw NonPrimeOrder(std::to_string(action_order) + " is not prime");
    return count % action_order != 0;
}

} // namespace fusioncat
