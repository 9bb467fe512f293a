#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fusioncat/errors.hpp"

namespace fusioncat {

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& a, const Perm& b) { // (a*b)(x) = a(b(x))
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline Perm perm_inverse(const Perm& a) {
    Perm c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<int>(i);
    return c;
}

inline Perm perm_identity(std::size_t degree) {
    Perm e(degree);
    std::iota(e.begin(), e.end(), 0);
    return e;
}

/// Finite permutation group stored as its full element set.
struct PermGroup {
    std::size_t degree = 0;
    std::vector<Perm> elements; // sorted

    static PermGroup generate(std::size_t degree, const std::vector<Perm>& gens) {
        std::set<Perm> seen{perm_identity(degree)};
        std::vector<Perm> queue{perm_identity(degree)};
        while (!queue.empty()) {
            Perm cur = queue.back();
            queue.pop_back();
            for (const Perm& g : gens) {
                Perm nxt = perm_compose(g, cur);
                if (seen.insert(nxt).second) queue.push_back(nxt);
            }
        }
        return {degree, {seen.begin(), seen.end()}};
    }

    std::size_t order() const { return elements.size(); }

    bool is_abelian() const {
        for (const Perm& a : elements)
            for (const Perm& b : elements)
                if (perm_compose(a, b) != perm_compose(b, a)) return false;
        return true;
    }
};

inline int perm_order(const Perm& p) {
    Perm cur = p;
    const Perm id = perm_identity(p.size());
    int ord = 1;
    while (cur != id) { cur = perm_compose(cur, p); ++ord; }
    return ord;
}

/// Named groups accepted by the CLI: s3, a4, s4, d4, q8, zN.
inline PermGroup named_group(const std::string& name) {
    auto cycle = [](std::size_t degree, std::vector<int> pts) {
        Perm p = perm_identity(degree);
        for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
        return p;
    };
    if (name == "s3") return PermGroup::generate(3, {cycle(3, {0, 1}), cycle(3, {0, 1, 2})});
    if (name == "a4")
        return PermGroup::generate(4, {cycle(4, {0, 1, 2}),
                                       perm_compose(cycle(4, {0, 1}), cycle(4, {2, 3}))});
    if (name == "s4") return PermGroup::generate(4, {cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})});
    if (name == "d4") {
        Perm rot = cycle(4, {0, 1, 2, 3});
        Perm flip = perm_compose(cycle(4, {1, 3}), perm_identity(4));
        return PermGroup::generate(4, {rot, flip});
    }
    if (name == "q8") {
        // right-regular action on {1,-1,i,-i,j,-j,k,-k}; table index: sign + 2*axis
        auto mul = [](int x, int y) {
            const int sx = x & 1, ax = x >> 1, sy = y & 1, ay = y >> 1;
            static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
            static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
            return (sign[ax][ay] ^ sx ^ sy) + 2 * axis[ax][ay];
        };
        Perm pi(8), pj(8);
        const int i_el = 2 * 1, j_el = 2 * 2;
        for (int x = 0; x < 8; ++x) {
            pi[x] = mul(i_el, x);
            pj[x] = mul(j_el, x);
        }
        return PermGroup::generate(8, {pi, pj});
    }
    if (name.rfind("z", 0) == 0 && name.size() > 1) {
        const int n = std::stoi(name.substr(1));
        if (n < 1) throw UnknownName("cyclic order must be >= 1");
        std::vector<int> pts(n);
        std::iota(pts.begin(), pts.end(), 0);
        return PermGroup::generate(static_cast<std::size_t>(n), {cycle(n, pts)});
    }
    throw UnknownName("no group named '" + name + "'");
}

namespace detail {

// Prime-power cyclic factors of an abelian subgroup, recovered from the
// element-order profile: with c_k = log_p #{h : ord(h) | p^k}, the p-type
// partition has c_k - c_{k-1} parts of size >= k.
inline std::vector<long long> abelian_prime_power_factors(const std::vector<Perm>& elements) {
    std::vector<int> ords;
    ords.reserve(elements.size());
    for (const Perm& h : elements) ords.push_back(perm_order(h));

    std::vector<long long> factors;
    long long rest = static_cast<long long>(elements.size());
    for (long long p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        std::vector<int> c{0};
        for (int k = 1;; ++k) {
            long long pk = 1;
            for (int t = 0; t < k; ++t) pk *= p;
            long long count = 0;
            for (int o : ords)
                if (pk % o == 0) ++count;
            int ck = 0;
            while (count > 1) { count /= p; ++ck; }
            c.push_back(ck);
            if (c[k] == c[k - 1]) break;
        }
        for (std::size_t k = 1; k < c.size(); ++k) {
            const int ge_k = c[k] - c[k - 1];
            const int ge_k1 = k + 1 < c.size() ? c[k + 1] - c[k] : 0;
            long long pk = 1;
            for (std::size_t t = 0; t < k; ++t) pk *= p;
            for (int r = 0; r < ge_k - ge_k1; ++r) factors.push_back(pk);
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

// invariant-factor assembly for display names: repeatedly multiply together
// the largest remaining power of each prime
inline std::vector<long long> invariant_factors(std::vector<long long> prime_powers) {
    std::vector<long long> inv;
    while (!prime_powers.empty()) {
        std::map<long long, long long> largest; // prime -> largest power
        for (long long q : prime_powers) {
            long long p = 2;
            while (q % p != 0) ++p;
            largest[p] = std::max(largest[p], q);
        }
        long long factor = 1;
        for (const auto& [p, q] : largest) {
            factor *= q;
            prime_powers.erase(std::find(prime_powers.begin(), prime_powers.end(), q));
        }
        inv.push_back(factor);
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

} // namespace detail

struct SubgroupClass {
    std::string name;          // structural name, e.g. "Z2xZ2", "S3"
    std::size_t class_size = 0; // number of conjugate subgroups
    std::size_t order = 0;
    long long multiplier = 1;  // |H^2(H, U(1))|
};

struct BoundaryCount {
    std::vector<SubgroupClass> classes;
    long long total = 0;
};

/// Gapped boundaries of the double of a finite group G: subgroup conjugacy
/// classes weighted by Schur multiplier order. Abelian multipliers come from
/// the cyclic decomposition; non-abelian ones from a built-in table.
inline BoundaryCount boundary_count_group(const PermGroup& g) {
    if (g.order() > 64)
        throw GroupTooLarge("group of order " + std::to_string(g.order()) +
                            " exceeds the subgroup-scan bound");

    // all subgroups, by closure growth
    std::set<std::vector<Perm>> all;
    std::vector<std::vector<Perm>> frontier;
    const std::vector<Perm> trivial{perm_identity(g.degree)};
    all.insert(trivial);
    frontier.push_back(trivial);
    while (!frontier.empty()) {
        std::vector<std::vector<Perm>> next;
        for (const auto& sub : frontier) {
            for (const Perm& x : g.elements) {
                if (std::binary_search(sub.begin(), sub.end(), x)) continue;
                std::set<Perm> grown(sub.begin(), sub.end());
                std::vector<Perm> queue{x};
                grown.insert(x);
                while (!queue.empty()) {
                    Perm cur = queue.back();
                    queue.pop_back();
                    for (const Perm& s : std::vector<Perm>(grown.begin(), grown.end())) {
                        Perm prod = perm_compose(cur, s);
                        if (grown.insert(prod).second) queue.push_back(prod);
                        prod = perm_compose(s, cur);
                        if (grown.insert(prod).second) queue.push_back(prod);
                    }
                }
                std::vector<Perm> grown_v(grown.begin(), grown.end());
                if (all.insert(grown_v).second) next.push_back(std::move(grown_v));
            }
        }
        frontier.swap(next);
    }

    // conjugacy classes of subgroups
    std::set<std::vector<Perm>> assigned;
    BoundaryCount out;
    for (const auto& sub : all) {
        if (assigned.count(sub)) continue;
        std::set<std::vector<Perm>> orbit;
        for (const Perm& c : g.elements) {
            const Perm cinv = perm_inverse(c);
            std::vector<Perm> conj;
            conj.reserve(sub.size());
            for (const Perm& s : sub) conj.push_back(perm_compose(c, perm_compose(s, cinv)));
            std::sort(conj.begin(), conj.end());
            orbit.insert(std::move(conj));
        }
        for (const auto& o : orbit) assigned.insert(o);

        SubgroupClass cls;
        cls.class_size = orbit.size();
        cls.order = sub.size();

        PermGroup h{g.degree, sub};
        if (h.is_abelian()) {
            const auto factors = detail::abelian_prime_power_factors(sub);
            long long mult = 1;
            for (std::size_t i = 0; i < factors.size(); ++i)
                for (std::size_t j = i + 1; j < factors.size(); ++j)
                    mult *= std::gcd(factors[i], factors[j]);
            cls.multiplier = mult;
            const auto inv = detail::invariant_factors(factors);
            if (inv.empty()) {
                cls.name = "1";
            } else {
                for (std::size_t i = 0; i < inv.size(); ++i)
                    cls.name += (i ? "x" : "") + ("Z" + std::to_string(inv[i]));
            }
        } else {
            // fingerprint: (order, element-order histogram)
            std::map<int, int> hist;
            for (const Perm& s : sub) ++hist[perm_order(s)];
            struct Known {
                std::size_t order;
                std::map<int, int> hist;
                const char* name;
                long long multiplier;
            };
            static const std::vector<Known> table = {
                {6, {{1, 1}, {2, 3}, {3, 2}}, "S3", 1},
                {8, {{1, 1}, {2, 5}, {4, 2}}, "D4", 2},
                {8, {{1, 1}, {2, 1}, {4, 6}}, "Q8", 1},
                {10, {{1, 1}, {2, 5}, {5, 4}}, "D5", 1},
                {12, {{1, 1}, {2, 3}, {3, 8}}, "A4", 2},
                {12, {{1, 1}, {2, 7}, {3, 2}, {6, 2}}, "D6", 2},
                {12, {{1, 1}, {2, 1}, {3, 2}, {4, 6}, {6, 2}}, "Dic3", 1},
                {14, {{1, 1}, {2, 7}, {7, 6}}, "D7", 1},
                {24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, "S4", 2},
                {60, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}, "A5", 2},
            };
            const Known* match = nullptr;
            for (const auto& k : table)
                if (k.order == sub.size() && k.hist == hist) { match = &k; break; }
            if (!match)
                throw UnknownMultiplier("non-abelian subgroup of order " +
                                        std::to_string(sub.size()) +
                                        " is outside the multiplier table");
            cls.name = match->name;
            cls.multiplier = match->multiplier;
        }
        out.classes.push_back(std::move(cls));
    }

    std::sort(out.classes.begin(), out.classes.end(),
              [](const SubgroupClass& a, const SubgroupClass& b) {
                  return a.order != b.order ? a.order < b.order : a.name < b.name;
              });
    for (const auto& c : out.classes) out.total += c.multiplier;
    return out;
}

} // namespace fusioncat
