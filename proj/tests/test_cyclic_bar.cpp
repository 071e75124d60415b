#include <catch_amalgamated.hpp>

#include "dihomol/cyclic_bar.hpp"

using namespace dihomol;

namespace {

const Field Q = Field::rationals();

struct Sphere {
    CyclicBar bar{presets::sphere_even(Q, 2)};
    std::uint16_t one = static_cast<std::uint16_t>(bar.algebra().unit());
    std::uint16_t a = static_cast<std::uint16_t>(*bar.algebra().find("a"));

    BarWord alpha(int n) const {
        BarWord w{one};
        w.insert(w.end(), n, a);
        return w;
    }
    BarWord beta(int n) const {
        BarWord w{a};
        w.insert(w.end(), n, a);
        return w;
    }
    ChainElement x(const BarWord& w) const { return ChainElement(Q, w); }
};

}  // namespace

TEST_CASE("sphere words and degrees") {
    const Sphere s;
    CHECK(s.bar.total_degree(s.alpha(3)) == -3);
    CHECK(s.bar.total_degree(s.beta(3)) == -5);
    CHECK(s.bar.label(s.alpha(2)) == "[1|a|a]");
    CHECK(s.bar.is_degenerate(BarWord{s.a, s.one}));
    CHECK_FALSE(s.bar.is_degenerate(s.alpha(2)));
    // alpha_n and beta_{n-2} share degree -n.
    const std::vector<std::size_t> dims = {1, 1, 2, 2, 2, 2, 2};
    for (int n = 0; n < 7; ++n) CHECK(s.bar.words(-n).size() == dims[n]);
    CHECK(s.bar.words(1).empty());
    CHECK(s.bar.words(-4) == std::vector<BarWord>{s.beta(2), s.alpha(4)});
}

TEST_CASE("hand computed operators on the sphere") {
    const Sphere s;
    // b(alpha_n) = (1 + (-1)^n) beta_{n-1}
    CHECK(s.bar.b(s.x(s.alpha(2))) == ChainElement(Q) + ChainElement(Q, s.beta(1)) + ChainElement(Q, s.beta(1)));
    CHECK(s.bar.b(s.x(s.alpha(3))).is_zero());
    CHECK(s.bar.b(s.x(s.beta(2))).is_zero());
    // B(beta_n) = (n + 1) alpha_{n+1}, B(alpha_n) = 0
    ChainElement three_alpha(Q);
    three_alpha.add(s.alpha(3), Scalar(Q, 3));
    CHECK(s.bar.B(s.x(s.beta(2))) == three_alpha);
    CHECK(s.bar.B(s.x(s.beta(1))).is_zero());
    CHECK(s.bar.B(s.x(s.alpha(2))).is_zero());
    CHECK(s.bar.R(s.x(s.alpha(2))) == -s.x(s.alpha(2)));
    CHECK(s.bar.R(s.x(s.alpha(3))) == s.x(s.alpha(3)));
    CHECK(s.bar.R(s.x(s.alpha(4))) == s.x(s.alpha(4)));
    CHECK(s.bar.B_shuffle(s.x(s.beta(4))) == s.bar.B(s.x(s.beta(4))));
}

TEST_CASE("simplicial structure") {
    const Sphere s;
    const BarWord w = s.alpha(2);
    CHECK_THROWS_AS(s.bar.face(0, BarWord{s.a}), std::out_of_range);
    CHECK_THROWS_AS(s.bar.face(3, w), std::out_of_range);
    CHECK(s.bar.face(0, w) == s.x(s.beta(1)));
    CHECK(s.bar.face(1, w).is_zero());
    CHECK(s.bar.degeneracy(0, s.alpha(1)) == s.x(BarWord{s.one, s.one, s.a}));
    // t rotates the last letter to the front.
    CHECK(s.bar.t(BarWord{s.one, s.a}) == s.x(BarWord{s.a, s.one}));
    CHECK(s.bar.t_inverse(BarWord{s.a, s.one}) == s.x(BarWord{s.one, s.a}));
}

TEST_CASE("Hochschild window of the sphere") {
    const ComplexWindow c = hochschild_window(presets::sphere_even(Q, 2), {-12, 1});
    CHECK(c.satisfies_d_squared());
    const BettiTable t = homology(c);
    for (int k = -11; k <= 0; ++k) CHECK(t.at(k) == 1);
    CHECK_THROWS_AS(t.at(-12), std::out_of_range);
    CHECK_THROWS_AS(homology(hochschild_window(presets::point(Q), {0, 1})), std::invalid_argument);
}

TEST_CASE("identity suite passes on every preset") {
    for (const Field& f : {Q, Field::prime(2), Field::prime(3)}) {
        for (const char* token : {"point", "sphere2", "truncated_poly(2,3)", "truncated_poly(3,2)", "noncommutative_odd"}) {
            INFO(token << " over " << f.name());
            const IdentityReport r = identity_suite(presets::from_token(token, f), 4, 5000);
            CHECK(r.ok());
            CHECK(r.exhaustive);
        }
    }
}

TEST_CASE("the reversal sign is pinned by odd generators") {
    const InvolutiveDGA nc = presets::noncommutative_odd(Q);
    CHECK(identity_suite(nc, 4, 5000, ReversalSign::koszul).ok());
    const IdentityReport other = identity_suite(nc, 4, 5000, ReversalSign::last_past_middle);
    CHECK_FALSE(other.ok());
    // Even generators cannot tell the two apart.
    CHECK(identity_suite(presets::sphere_even(Q, 2), 5, 5000, ReversalSign::last_past_middle).ok());
}

TEST_CASE("sampling keeps the seed reproducible") {
    const InvolutiveDGA nc = presets::noncommutative_odd(Field::prime(5));
    const IdentityReport a = identity_suite(nc, 5, 20, kReversalSign, 42);
    const IdentityReport b = identity_suite(nc, 5, 20, kReversalSign, 42);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.ok());
    CHECK(a.checks == b.checks);
}

TEST_CASE("degree one generators make degrees infinite") {
    const InvolutiveDGA ext(Q, {{"1", 0}, {"x", 1}}, 0,
                            {SparseVector::unit(Q, 0), SparseVector::unit(Q, 1), SparseVector::unit(Q, 1), {}},
                            {{}, {}}, {SparseVector::unit(Q, 0), SparseVector::unit(Q, 1)});
    const CyclicBar bar(ext);
    CHECK_FALSE(bar.degreewise_finite());
    CHECK_THROWS_AS(bar.words(0), FinitenessError);
    const InvolutiveDGA capped(Q, ext.basis(), 0,
                               {SparseVector::unit(Q, 0), SparseVector::unit(Q, 1), SparseVector::unit(Q, 1), {}},
                               {{}, {}}, {SparseVector::unit(Q, 0), SparseVector::unit(Q, 1)}, 3);
    CHECK(CyclicBar(capped).words(0).size() == 4);
}
