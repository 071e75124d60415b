#include <random>

#include <catch_amalgamated.hpp>

#include "dihomol/matrix.hpp"
#include "oracle.hpp"

using namespace dihomol;

namespace {

/// Random sparse integer matrix, entries in [-3, 3] with the given density.
std::vector<std::vector<long>> random_ints(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> value(-3, 3);
    std::bernoulli_distribution present(0.35);
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols, 0));
    for (auto& row : m) {
        for (auto& x : row) x = present(rng) ? value(rng) : 0;
    }
    return m;
}

ExactMatrix to_exact(const Field& f, const std::vector<std::vector<long>>& m) {
    std::vector<Triplet> ts;
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (m[r][c] != 0) ts.push_back({r, c, Scalar(f, m[r][c])});
        }
    }
    return ExactMatrix::from_triplets(f, m.size(), m.empty() ? 0 : m[0].size(), ts);
}

std::size_t dense_rank(const Field& f, const std::vector<std::vector<long>>& m) {
    if (f.is_rational()) {
        std::vector<std::vector<mpq_class>> q(m.size());
        for (std::size_t r = 0; r < m.size(); ++r) {
            for (long x : m[r]) q[r].emplace_back(x);
        }
        return oracle::rank_rational(q);
    }
    const std::uint64_t p = f.characteristic();
    std::vector<std::vector<std::uint64_t>> z(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        for (long x : m[r]) z[r].push_back(static_cast<std::uint64_t>(((x % static_cast<long>(p)) + p) % p));
    }
    return oracle::rank_mod(z, p);
}

}  // namespace

TEST_CASE("small worked example") {
    const Field q = Field::rationals();
    // [[1, 2], [2, 4]] has rank 1 and kernel spanned by (-2, 1).
    const ExactMatrix m = to_exact(q, {{1, 2}, {2, 4}});
    CHECK(rank(m) == 1);
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(apply(m, ker[0]).empty());
    CHECK(ker[0].coeff(0, q) == Scalar(q, -2) * ker[0].coeff(1, q));
    // Over F2 the same matrix is [[1, 0], [0, 0]].
    CHECK(rank(to_exact(Field::prime(2), {{1, 2}, {2, 4}})) == 1);
    CHECK(rank(to_exact(Field::prime(3), {{1, 1}, {1, -2}})) == 1);
    CHECK(rank(to_exact(q, {{1, 1}, {1, -2}})) == 2);
}

TEST_CASE("sparse rank agrees with dense elimination") {
    std::mt19937_64 rng(7);
    for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(5), Field::prime(65521)}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t rows = 1 + rng() % 9;
            const std::size_t cols = 1 + rng() % 9;
            const auto ints = random_ints(rng, rows, cols);
            const ExactMatrix m = to_exact(f, ints);
            const std::size_t r = rank(m);
            CHECK(r == dense_rank(f, ints));
            CHECK(r == rank(m.transpose()));
            for (PivotOrder order : {PivotOrder::forward, PivotOrder::reversed}) {
                const auto ker = kernel_basis(m, order);
                CHECK(ker.size() == cols - r);
                for (const auto& v : ker) CHECK(apply(m, v).empty());
                CHECK(rank(ExactMatrix::from_columns(f, cols, ker)) == ker.size());
            }
        }
    }
}

TEST_CASE("rank over Q bounds rank over F_p") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const auto ints = random_ints(rng, 6, 6);
        const std::size_t rq = rank(to_exact(Field::rationals(), ints));
        CHECK(rq >= rank(to_exact(Field::prime(2), ints)));
        CHECK(rq >= rank(to_exact(Field::prime(3), ints)));
    }
}

TEST_CASE("composition and sums") {
    const Field q = Field::rationals();
    const ExactMatrix a = to_exact(q, {{1, 2, 0}, {0, 1, -1}});
    const ExactMatrix b = to_exact(q, {{1, 0}, {1, 1}, {0, 3}});
    CHECK(compose(a, b) == to_exact(q, {{3, 2}, {1, -2}}));
    CHECK(add_scaled(a, Scalar(q, -1), a).is_zero());
    CHECK(compose(ExactMatrix::identity(q, 2), a) == a);
    CHECK(a.transpose().transpose() == a);
    CHECK(a.at(0, 1) == Scalar(q, 2));
    CHECK_THROWS_AS(compose(a, a), std::invalid_argument);
    const std::vector<Triplet> cancelling = {{0, 0, Scalar(q, 1)}, {0, 0, Scalar(q, -1)}};
    CHECK(ExactMatrix::from_triplets(q, 1, 1, cancelling).is_zero());
}

TEST_CASE("echelon reducer tracks combinations") {
    const Field f = Field::prime(7);
    EchelonReducer red(f);
    const SparseVector u(std::vector<Entry>{{0, Scalar(f, 1)}, {2, Scalar(f, 3)}});
    const SparseVector v(std::vector<Entry>{{1, Scalar(f, 2)}, {2, Scalar(f, 1)}});
    CHECK(red.insert(u, SparseVector::unit(f, 0)));
    CHECK(red.insert(v, SparseVector::unit(f, 1)));
    SparseVector w = u;
    w.scale(Scalar(f, 4));
    w.axpy(Scalar(f, 5), v);
    CHECK_FALSE(red.insert(w));
    const auto r = red.reduce(w);
    CHECK(r.residual.empty());
    CHECK(r.track.coeff(0, f) == Scalar(f, 4));
    CHECK(r.track.coeff(1, f) == Scalar(f, 5));
    CHECK(red.size() == 2);
}
