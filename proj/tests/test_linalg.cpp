#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "contextlab/hypergraph.hpp"
#include "contextlab/linalg.hpp"
#include "oracles.hpp"

using namespace contextlab;

namespace {

using Q = Rational;
using VecQ = Vector<Rational>;
using MatQ = SquareMatrix<Rational>;

Q frac(int p, int q) { return Q(int128{p}, int128{q}); }

}  // namespace

TEST(InnerProduct, Examples) {
    EXPECT_EQ(inner_product(VecQ{1, 1}, VecQ{1, 1}), Q(2));
    EXPECT_EQ(inner_product(VecQ{2, 1}, VecQ{1, -2}), Q(0));
    EXPECT_EQ(inner_product(VecQ{0, 0, 1, -1}, VecQ{1, -1, 0, 0}), Q(0));
    EXPECT_DOUBLE_EQ(inner_product(Vector<double>{0.5, 2.0}, Vector<double>{2.0, 0.25}), 1.5);
    EXPECT_THROW(inner_product(VecQ{1, 2}, VecQ{1, 2, 3}), DimensionError);
}

TEST(Projector, Examples) {
    EXPECT_EQ(projector_from_vector(VecQ{1, 1}).matrix(), frac(1, 2) * MatQ({{1, 1}, {1, 1}}));
    EXPECT_EQ(projector_from_vector(VecQ{1, 0}).matrix(), MatQ({{1, 0}, {0, 0}}));
    EXPECT_EQ(projector_from_vector(VecQ{3, 4}).matrix(), frac(1, 25) * MatQ({{9, 12}, {12, 16}}));
    EXPECT_THROW(projector_from_vector(VecQ{0, 0}), ZeroVectorError);
}

TEST(Projector, SymmetricIdempotentTraceOne) {
    std::mt19937 rng(11);
    for (int i = 0; i < 50; ++i) {
        auto f = projector_from_vector(oracle::random_rational_vector(rng, 2 + i % 5)).matrix();
        EXPECT_TRUE(f.is_symmetric());
        EXPECT_EQ(f * f, f);
        EXPECT_EQ(f.trace(), Q(1));
    }
}

TEST(Householder, Examples) {
    EXPECT_EQ(householder_from_vector(VecQ{1, 1}).matrix(), (-MatQ({{0, 1}, {1, 0}})));
    EXPECT_EQ(householder_from_vector(VecQ{1, 0}).matrix(), (MatQ({{-1, 0}, {0, 1}})));

    auto u = householder_from_vector(VecQ{0, 0, 1, -1});
    EXPECT_EQ(u.matrix(), (MatQ({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})));
    EXPECT_EQ((u.matrix() * VecQ{0, 0, 1, -1}), (VecQ{0, 0, -1, 1}));
    EXPECT_EQ((u.matrix() * VecQ{0, 0, 1, 1}), (VecQ{0, 0, 1, 1}));
    EXPECT_THROW(householder_from_vector(VecQ{0, 0, 0}), ZeroVectorError);
}

TEST(Reflect, Examples) {
    auto u = householder_from_vector(VecQ{1, 1});
    EXPECT_EQ(reflect(u, VecQ{2, 1}), (VecQ{-1, -2}));
    EXPECT_EQ(reflect(u, VecQ{1, 1}), (VecQ{-1, -1}));
    EXPECT_EQ(reflect(u, VecQ{1, -1}), (VecQ{1, -1}));
    EXPECT_THROW(reflect(u, VecQ{1, 2, 3}), DimensionError);
}

TEST(ReflectorBetween, Examples) {
    auto u = reflector_between(VecQ{2, 1}, VecQ{-1, -2});
    EXPECT_EQ(u.generator(), (VecQ{3, 3}));
    EXPECT_EQ(u.matrix(), householder_from_vector(VecQ{1, 1}).matrix());
    EXPECT_EQ(reflect(u, VecQ{2, 1}), (VecQ{-1, -2}));

    auto same = reflector_between(VecQ{1, 0}, VecQ{1, 0});
    EXPECT_EQ(same.generator(), (VecQ{0, 1}));
    EXPECT_EQ(reflect(same, VecQ{1, 0}), (VecQ{1, 0}));

    auto u3 = reflector_between(VecQ{1, 2, 2}, VecQ{3, 0, 0});
    EXPECT_EQ(u3.generator(), (VecQ{-2, 2, 2}));
    EXPECT_EQ(reflect(u3, VecQ{1, 2, 2}), (VecQ{3, 0, 0}));
    EXPECT_EQ(reflect(u3, VecQ{3, 0, 0}), (VecQ{1, 2, 2}));
}

TEST(ReflectorBetween, Errors) {
    EXPECT_THROW(reflector_between(VecQ{1, 0}, VecQ{1, 1}), std::invalid_argument);
    EXPECT_THROW(reflector_between(VecQ{0, 0}, VecQ{0, 0}), ZeroVectorError);
    EXPECT_THROW(reflector_between(VecQ{1, 0}, VecQ{1, 0, 0}), DimensionError);
}

TEST(ReflectorBetween, DegenerateGeneratorIsOrthogonal) {
    // e1 has a nonzero residual against (0,1,1)
    auto u = reflector_between(VecQ{0, 1, 1}, VecQ{0, 1, 1});
    EXPECT_EQ(u.generator(), (VecQ{1, 0, 0}));
    // e1 residual vanishes for x = e1; next is e2
    EXPECT_EQ(reflector_between(VecQ{5, 0, 0}, VecQ{5, 0, 0}).generator(), (VecQ{0, 1, 0}));
    auto w = reflector_between(VecQ{1, 1}, VecQ{1, 1});
    EXPECT_EQ(w.generator(), (VecQ{frac(1, 2), frac(-1, 2)}));
}

TEST(ReflectorBetween, RoundTripOnRandomPairs) {
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
        std::size_t dim = 2 + i % 5;
        auto x = oracle::random_rational_vector(rng, dim);
        // y = U_w x for a random w has the same norm
        auto y = reflect(householder_from_vector(oracle::random_rational_vector(rng, dim)), x);
        auto u = reflector_between(x, y);
        EXPECT_EQ(reflect(u, x), y);
        EXPECT_EQ(reflect(u, y), x);
        EXPECT_EQ(reflect(u, reflect(u, x)), x);
    }
}

TEST(Determinant, Examples) {
    EXPECT_EQ(determinant(-MatQ({{0, 1}, {1, 0}})), Q(-1));
    EXPECT_EQ(determinant(MatQ::identity(4)), Q(1));
    EXPECT_EQ(determinant(MatQ::diagonal({2, 3, 5, 7})), Q(210));
    EXPECT_EQ(determinant(MatQ({{0, 1}, {0, 2}})), Q(0));
    EXPECT_EQ(determinant(MatQ({{0, 2, 1}, {1, 0, 0}, {0, 0, 3}})), Q(-6));
    EXPECT_NEAR(determinant(SquareMatrix<double>({{0.0, 2.0}, {3.0, 1.0}})), -6.0, 1e-12);
}

TEST(Determinant, MatchesLeibnizExpansion) {
    std::mt19937 rng(3);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + t % 5;
        MatQ m(n);
        std::vector<std::vector<Q>> rows(n, std::vector<Q>(n));
        for (std::size_t i = 0; i < n; ++i) {
            auto v = oracle::random_rational_vector(rng, n, false);
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j] = v[j];
        }
        EXPECT_EQ(determinant(m), oracle::leibniz_determinant(rows));
    }
}

TEST(ContextProduct, Examples) {
    auto two = context_product(std::vector<VecQ>{{1, 0}, {0, 1}});
    EXPECT_EQ(two.matrix, -MatQ::identity(2));
    EXPECT_TRUE(two.complete);

    auto ceg = preset("ceg18");
    auto c1 = context_product(ceg.context_labels(0));
    EXPECT_EQ(c1.matrix, -MatQ::identity(4));
    EXPECT_TRUE(c1.complete);

    VecQ v{frac(3, 5), frac(4, 5), 0};
    auto single = context_product(std::vector<VecQ>{v});
    EXPECT_FALSE(single.complete);
    EXPECT_EQ(single.matrix, householder_from_vector(v).matrix());
    EXPECT_FALSE(single.matrix == -MatQ::identity(3));

    EXPECT_THROW(context_product(std::vector<VecQ>{{1, 0}, {1, 1}}), OrthogonalityError);
}

TEST(ContextProduct, StandardBasesGiveMinusIdentity) {
    for (std::size_t n = 2; n <= 6; ++n) {
        std::vector<VecQ> basis;
        for (std::size_t i = 0; i < n; ++i) basis.push_back(VecQ::unit(n, i));
        EXPECT_EQ(context_product(basis).matrix, -MatQ::identity(n)) << "n=" << n;
    }
}

TEST(HouseholderProperties, RandomRationalVectors) {
    std::mt19937 rng(2024);
    for (int t = 0; t < 200; ++t) {
        std::size_t dim = 2 + t % 5;
        auto x = oracle::random_rational_vector(rng, dim);
        auto u = householder_from_vector(x);
        const auto& m = u.matrix();
        ASSERT_EQ(m, m.transpose());
        ASSERT_EQ(m * m, MatQ::identity(dim));
        ASSERT_EQ(determinant(m), Q(-1));
        ASSERT_EQ(m * x, -x);

        // w orthogonal to x by exact projection of a random vector
        auto r = oracle::random_rational_vector(rng, dim, false);
        auto w = r - (inner_product(r, x) / inner_product(x, x)) * x;
        ASSERT_EQ(inner_product(w, x), Q(0));
        ASSERT_EQ(m * w, w);
        // norm preserved
        auto rv = reflect(u, r);
        ASSERT_EQ(inner_product(rv, rv), inner_product(r, r));
    }
}

TEST(Orthonormalize, SingleVector) {
    auto r = orthonormalize({Vector<double>{2.0, 1.0}});
    ASSERT_EQ(r.reflectors.size(), 1U);
    const auto& z = r.reflectors[0].generator();
    EXPECT_NEAR(z[0], 2.0 - std::sqrt(5.0), 1e-12);
    EXPECT_NEAR(z[1], 1.0, 1e-12);
    EXPECT_TRUE((r.vectors[0] == Vector<double>{1.0, 0.0}));
    EXPECT_TRUE((r.span_basis[0] == Vector<double>{2.0 / std::sqrt(5.0), 1.0 / std::sqrt(5.0)}));
}

TEST(Orthonormalize, StandardBasisUnchangedUpToSign) {
    std::vector<Vector<double>> basis;
    for (std::size_t i = 0; i < 3; ++i) basis.push_back(Vector<double>::unit(3, i));
    auto r = orthonormalize(basis);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            EXPECT_NEAR(std::abs(r.vectors[i][j]), i == j ? 1.0 : 0.0, 1e-12);
            EXPECT_NEAR(std::abs(r.span_basis[i][j]), i == j ? 1.0 : 0.0, 1e-12);
        }
    }
}

TEST(Orthonormalize, RandomVectorsGiveOrthonormalSets) {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 5, k = 1 + t % 5;
        std::vector<Vector<double>> s;
        for (std::size_t i = 0; i < k; ++i) {
            Vector<double> v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = u(rng);
            s.push_back(v);
        }
        auto r = orthonormalize(s);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                double want = i == j ? 1.0 : 0.0;
                EXPECT_NEAR(inner_product(r.vectors[i], r.vectors[j]), want, kFloatTolerance);
                EXPECT_NEAR(inner_product(r.span_basis[i], r.span_basis[j]), want, kFloatTolerance);
            }
        // each input lies in the span of the span_basis vectors
        for (const auto& v : s) {
            Vector<double> rest = v;
            for (const auto& q : r.span_basis) rest = rest - inner_product(q, v) * q;
            EXPECT_LT(norm(rest), kFloatTolerance);
        }
    }
}

TEST(Orthonormalize, RejectsDependentInputs) {
    EXPECT_THROW(orthonormalize({Vector<double>{1.0, 2.0, 0.0}, Vector<double>{2.0, 4.0, 0.0}}), LinearDependenceError);
    EXPECT_THROW(orthonormalize({Vector<double>{0.0, 0.0}}), LinearDependenceError);
    EXPECT_THROW(orthonormalize({Vector<double>{1.0, 0.0}, Vector<double>{0.0, 1.0}, Vector<double>{1.0, 1.0}}),
                 LinearDependenceError);
}
