#pragma once

// Dynkin types, Weyl group exponents and Poincare polynomials of split flag
// varieties. The closed form is the Solomon formula
//
//     P(G/B, t) = prod_i (t^{e_i + 1} - 1) / (t - 1)
//
// over the Weyl exponents e_i. An independent breadth-first enumeration of
// the Weyl group (acting on simple-root coordinates through the Cartan
// pairing) doubles as a brute-force oracle for it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "jinv/errors.hpp"
#include "jinv/poly.hpp"

namespace jinv {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Series series_from_char(char c) {
    switch (c) {
        case 'A': return Series::A;
        case 'B': return Series::B;
        case 'C': return Series::C;
        case 'D': return Series::D;
        case 'E': return Series::E;
        case 'F': return Series::F;
        case 'G': return Series::G;
        default: throw InvalidInputError(std::string("unknown Dynkin series '") + c + "'");
    }
}

struct DynkinType {
    Series series;
    int rank;

    DynkinType(Series s, int n) : series(s), rank(n) {
        bool ok = false;
        switch (series) {
            case Series::A: ok = rank >= 1; break;
            case Series::B: ok = rank >= 2; break;
            case Series::C: ok = rank >= 3; break;
            case Series::D: ok = rank >= 4; break;
            case Series::E: ok = rank >= 6 && rank <= 8; break;
            case Series::F: ok = rank == 4; break;
            case Series::G: ok = rank == 2; break;
        }
        if (!ok)
            throw InvalidInputError("invalid Dynkin type " +
                                    std::string(1, static_cast<char>(series)) +
                                    std::to_string(rank));
    }

    std::string name() const {
        return std::string(1, static_cast<char>(series)) + std::to_string(rank);
    }

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

// Standard exponent tables, returned in nondecreasing order.
inline std::vector<int> exponents(const DynkinType& type) {
    const int n = type.rank;
    std::vector<int> e;
    switch (type.series) {
        case Series::A:
            for (int i = 1; i <= n; ++i) e.push_back(i);
            break;
        case Series::B:
        case Series::C:
            for (int i = 1; i <= n; ++i) e.push_back(2 * i - 1);
            break;
        case Series::D:
            for (int i = 1; i <= n - 1; ++i) e.push_back(2 * i - 1);
            e.push_back(n - 1);
            break;
        case Series::E:
            if (n == 6) e = {1, 4, 5, 7, 8, 11};
            if (n == 7) e = {1, 5, 7, 9, 11, 13, 17};
            if (n == 8) e = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case Series::F: e = {1, 5, 7, 11}; break;
        case Series::G: e = {1, 5}; break;
    }
    std::sort(e.begin(), e.end());
    return e;
}

inline BigInt weyl_order(const DynkinType& type) {
    BigInt order = 1;
    for (int e : exponents(type)) order *= (e + 1);
    return order;
}

struct WeylData {
    DynkinType type;
    std::vector<int> exponents;
    BigInt order;
};

inline WeylData weyl_data(const DynkinType& type) {
    return WeylData{type, exponents(type), weyl_order(type)};
}

// Cartan pairing a[i][j] = <alpha_i, alpha_j^v> in Bourbaki numbering
// (0-based here). The simple reflection acts by
//   s_j(alpha_i) = alpha_i - a[i][j] * alpha_j.
inline std::vector<std::vector<int>> cartan_pairing(const DynkinType& type) {
    const int n = type.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j, int aij, int aji) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    auto chain = [&](int first, int last) {
        for (int i = first; i < last; ++i) bond(i, i + 1, -1, -1);
    };
    switch (type.series) {
        case Series::A:
            chain(0, n - 1);
            break;
        case Series::B:  // alpha_n short
            chain(0, n - 2);
            bond(n - 2, n - 1, -2, -1);
            break;
        case Series::C:  // alpha_n long
            chain(0, n - 2);
            bond(n - 2, n - 1, -1, -2);
            break;
        case Series::D:
            chain(0, n - 2);
            bond(n - 3, n - 1, -1, -1);
            break;
        case Series::E:
            // Bourbaki: 1-3-4-5-6(-7(-8)) with 2 attached to 4.
            bond(0, 2, -1, -1);
            chain(2, n - 1);
            bond(1, 3, -1, -1);
            break;
        case Series::F:  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            bond(0, 1, -1, -1);
            bond(1, 2, -2, -1);
            bond(2, 3, -1, -1);
            break;
        case Series::G:  // alpha_1 short
            bond(0, 1, -1, -3);
            break;
    }
    return a;
}

inline IntPoly flag_poincare(const DynkinType& type) {
    IntPoly p = IntPoly::one();
    for (int e : exponents(type)) p *= geom_quotient(static_cast<std::uint64_t>(e) + 1, 1);
    return p;
}

// P(SB(A), t) = P(P^{n-1}, t) for an algebra of degree n.
inline IntPoly severi_brauer_poincare(std::uint64_t n) {
    if (n == 0) throw InvalidInputError("severi_brauer_poincare: degree must be positive");
    return geom_quotient(n, 1);
}

// Brute-force length generating function of the Weyl group: breadth-first
// enumeration of the elements, each represented by the images of the simple
// roots in simple-root coordinates (a faithful finite encoding). BFS depth
// equals Coxeter length. Independent of the exponent tables apart from the
// cap precheck.
inline IntPoly coxeter_length_oracle(const DynkinType& type, std::size_t cap = 1'000'000) {
    const int n = type.rank;
    const auto pairing = cartan_pairing(type);
    if (weyl_order(type) > BigInt(static_cast<std::uint64_t>(cap)))
        throw GroupTooLargeError("coxeter_length_oracle: |W(" + type.name() +
                                 ")| exceeds the cap of " + std::to_string(cap));

    const std::size_t bytes = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    // Key layout: column j (bytes [j*n, j*n+n)) holds the coordinates of the
    // image of alpha_j.
    std::string identity(bytes, '\0');
    for (int i = 0; i < n; ++i) identity[static_cast<std::size_t>(i) * n + i] = 1;

    std::unordered_set<std::string> seen;
    seen.max_load_factor(0.7f);
    seen.reserve(static_cast<std::size_t>(weyl_order(type)));
    seen.insert(identity);

    std::vector<std::string> frontier{identity};
    std::vector<BigInt> counts{BigInt(1)};
    std::string scratch(bytes, '\0');

    while (!frontier.empty()) {
        std::vector<std::string> next;
        for (const std::string& w : frontier) {
            for (int i = 0; i < n; ++i) {
                // (w s_i)(alpha_j) = w(alpha_j) - <alpha_j, alpha_i^v> w(alpha_i)
                const char* wi = w.data() + static_cast<std::size_t>(i) * n;
                for (int j = 0; j < n; ++j) {
                    const int c = pairing[j][i];
                    const char* wj = w.data() + static_cast<std::size_t>(j) * n;
                    char* out = scratch.data() + static_cast<std::size_t>(j) * n;
                    for (int k = 0; k < n; ++k)
                        out[k] = static_cast<char>(static_cast<signed char>(wj[k]) -
                                                   c * static_cast<signed char>(wi[k]));
                }
                if (seen.insert(scratch).second) next.push_back(scratch);
            }
        }
        if (seen.size() > cap)
            throw GroupTooLargeError("coxeter_length_oracle: enumeration exceeded the cap");
        if (!next.empty()) counts.emplace_back(next.size());
        frontier = std::move(next);
    }
    return IntPoly(std::move(counts));
}

namespace detail {

// Classify a connected sub-diagram (given as node ids of the ambient type)
// into a Dynkin type. Valid for any induced sub-diagram of a valid diagram.
inline DynkinType classify_component(const std::vector<int>& nodes,
                                     const std::vector<std::vector<int>>& pairing) {
    const int k = static_cast<int>(nodes.size());
    if (k == 1) return DynkinType(Series::A, 1);

    auto bond_mult = [&](int u, int v) { return pairing[u][v] * pairing[v][u]; };
    auto degree_of = [&](int u) {
        int d = 0;
        for (int v : nodes)
            if (v != u && bond_mult(u, v) > 0) ++d;
        return d;
    };

    int triple_u = -1, triple_v = -1, double_u = -1, double_v = -1;
    for (std::size_t x = 0; x < nodes.size(); ++x)
        for (std::size_t y = x + 1; y < nodes.size(); ++y) {
            int m = bond_mult(nodes[x], nodes[y]);
            if (m == 3) triple_u = nodes[x], triple_v = nodes[y];
            if (m == 2) double_u = nodes[x], double_v = nodes[y];
        }

    if (triple_u >= 0) return DynkinType(Series::G, 2);

    if (double_u >= 0) {
        if (k == 2) return DynkinType(Series::B, 2);
        const int du = degree_of(double_u), dv = degree_of(double_v);
        if (du == 2 && dv == 2) return DynkinType(Series::F, 4);
        const int leaf = du == 1 ? double_u : double_v;
        const int other = du == 1 ? double_v : double_u;
        // <alpha_other, alpha_leaf^v> = -2 means the leaf root is short.
        const bool short_leaf = pairing[other][leaf] == -2;
        return DynkinType(short_leaf ? Series::B : Series::C, k);
    }

    // Simply laced: a path or a single branch point.
    int branch = -1;
    for (int u : nodes) {
        int d = degree_of(u);
        if (d == 3) branch = u;
        if (d > 3) throw InvalidSubsetError("sub-diagram is not a Dynkin diagram");
    }
    if (branch < 0) return DynkinType(Series::A, k);

    std::vector<int> arms;
    for (int v : nodes) {
        if (v == branch || bond_mult(branch, v) == 0) continue;
        int len = 1, prev = branch, cur = v;
        for (;;) {
            int nxt = -1;
            for (int w : nodes)
                if (w != prev && w != cur && bond_mult(cur, w) > 0) nxt = w;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return DynkinType(Series::D, k);
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return DynkinType(Series::E, k);
    throw InvalidSubsetError("sub-diagram is not a Dynkin diagram");
}

}  // namespace detail

// Dynkin components of the sub-diagram spanned by theta (1-based Bourbaki
// indices into the simple roots of `type`).
inline std::vector<DynkinType> parabolic_components(const DynkinType& type,
                                                    std::vector<int> theta) {
    std::sort(theta.begin(), theta.end());
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
    for (int i : theta)
        if (i < 1 || i > type.rank)
            throw InvalidSubsetError("simple-root index " + std::to_string(i) +
                                     " out of range for " + type.name());

    const auto pairing = cartan_pairing(type);
    std::vector<int> nodes;
    for (int i : theta) nodes.push_back(i - 1);

    std::vector<bool> used(nodes.size(), false);
    std::vector<DynkinType> components;
    for (std::size_t s = 0; s < nodes.size(); ++s) {
        if (used[s]) continue;
        std::vector<int> comp{nodes[s]};
        used[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (std::size_t t = 0; t < nodes.size(); ++t)
                if (!used[t] && pairing[comp[head]][nodes[t]] != 0) {
                    used[t] = true;
                    comp.push_back(nodes[t]);
                }
        components.push_back(detail::classify_component(comp, pairing));
    }
    std::sort(components.begin(), components.end(), [](const DynkinType& x, const DynkinType& y) {
        return std::pair(static_cast<char>(x.series), x.rank) <
               std::pair(static_cast<char>(y.series), y.rank);
    });
    return components;
}

// Length generating function of the minimal coset representatives of
// W_theta \ W, i.e. P(G/P_theta, t). Exact by construction.
inline IntPoly parabolic_poincare(const DynkinType& type, const std::vector<int>& theta) {
    IntPoly denom = IntPoly::one();
    for (const DynkinType& comp : parabolic_components(type, theta)) denom *= flag_poincare(comp);
    return exact_div(flag_poincare(type), denom);
}

}  // namespace jinv
