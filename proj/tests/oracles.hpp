#pragma once

// Independent reference computations for tests. Deliberately naive; none of
// these call into the code paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "contextlab/hypergraph.hpp"
#include "contextlab/rational.hpp"

namespace oracle {

using contextlab::ContextHypergraph;
using contextlab::Rational;

/// Leibniz expansion over all permutations.
inline Rational leibniz_determinant(const std::vector<std::vector<Rational>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total(0);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::vector<int> to_pm(std::uint64_t bits, std::size_t n) {
    std::vector<int> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = (bits >> i) & 1U ? -1 : 1;
    return a;
}

/// Multiplies member values context by context.
inline long naive_product_sum(const ContextHypergraph& h, const std::vector<int>& a) {
    long s = 0;
    for (const auto& c : h.contexts()) {
        int p = 1;
        for (auto m : c.members) p *= a[m];
        s += p;
    }
    return s;
}

inline long naive_additive_sum(const ContextHypergraph& h, const std::vector<int>& a) {
    long s = 0;
    for (const auto& c : h.contexts())
        for (auto m : c.members) s += a[m];
    return s;
}

/// Every {0,1} map with exactly one 1 per context, as bitmasks of the 1s, ascending.
inline std::vector<std::uint64_t> brute_two_valued(const ContextHypergraph& h) {
    std::vector<std::uint64_t> out;
    const std::size_t n = h.observable_count();
    std::vector<bool> covered(n, false);
    for (const auto& c : h.contexts())
        for (auto m : c.members) covered[m] = true;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (!covered[i] && (bits >> i & 1U)) ok = false;
        for (const auto& c : h.contexts()) {
            if (!ok) break;
            int ones = 0;
            for (auto m : c.members) ones += (bits >> m) & 1U;
            ok = ones == 1;
        }
        if (ok) out.push_back(bits);
    }
    return out;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Random unlabeled hypergraph: n observables, contexts of size d drawn uniformly.
inline ContextHypergraph random_hypergraph(std::mt19937& rng, std::size_t n, std::size_t d, std::size_t contexts) {
    ContextHypergraph h(d);
    for (std::size_t i = 0; i < n; ++i) h.add_observable("o" + std::to_string(i));
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (std::size_t c = 0; c < contexts; ++c) {
        std::shuffle(ids.begin(), ids.end(), rng);
        h.add_context("K" + std::to_string(c), std::vector<std::size_t>(ids.begin(), ids.begin() + d));
    }
    return h;
}

inline contextlab::Vector<Rational> random_rational_vector(std::mt19937& rng, std::size_t dim, bool nonzero = true) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    for (;;) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < dim; ++i) c.emplace_back(contextlab::int128{num(rng)}, contextlab::int128{den(rng)});
        contextlab::Vector<Rational> v(std::move(c));
        if (!nonzero || !v.is_zero()) return v;
    }
}

}  // namespace oracle
