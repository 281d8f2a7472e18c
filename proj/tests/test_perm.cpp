#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdp/error.hpp"
#include "cdp/perm.hpp"
#include "test_support.hpp"

using namespace cdp;

TEST_CASE("identity and degree validation") {
    CHECK(Permutation::identity(3).images() == std::vector<int>{0, 1, 2});
    CHECK_THROWS_WITH_AS(Permutation::identity(0), "permutation degree must be >= 1", Error);

    const Permutation p = Permutation::from_cycles("(0123)", 4, 0);
    CHECK(Permutation::identity(4).compose(p) == p);
    CHECK(p.compose(Permutation::identity(4)) == p);

    CHECK(Permutation::identity(2).matrix() == Eigen::MatrixXd::Identity(2, 2));
}

TEST_CASE("bijectivity is rejected") {
    CHECK_THROWS_AS(Permutation({0, 0, 2}), Error);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
}

TEST_CASE("composition order matches the group-table identity") {
    // (p ∘ q)(i) = p(q(i)); on the cyclic set c^a ∘ c^b = c^{a+b}
    const CdpSet c4 = CdpSet::cyclic(4);
    const Permutation c = c4[1];
    const Permutation c2 = c.compose(c);
    for (int t = 0; t < 4; ++t) CHECK(c2(t) == (t + 2) % 4);

    const Permutation swap2 = Permutation::from_cycles("(01)", 2, 0);
    CHECK(swap2.compose(swap2).is_identity());

    CHECK_THROWS_AS(swap2.compose(c), Error);
}

TEST_CASE("inverse") {
    const Permutation p = Permutation::from_cycles("(012)", 3, 0);
    CHECK(p.inverse() == Permutation::from_cycles("(021)", 3, 0));
    CHECK(Permutation::identity(5).inverse().is_identity());

    const CdpSet c6 = CdpSet::cyclic(6);
    for (int k = 1; k < 6; ++k) CHECK(c6[k].inverse() == c6[6 - k]);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation q = test::random_perm(7, rng);
        CHECK(q.compose(q.inverse()).is_identity());
        CHECK(q.inverse().compose(q).is_identity());
    }
}

TEST_CASE("cycle parsing") {
    CHECK(Permutation::from_cycles("(12)(345)", 5, 1).images() == std::vector<int>{1, 0, 3, 4, 2});
    CHECK(Permutation::from_cycles("", 4, 0).is_identity());
    CHECK(Permutation::from_cycles("()", 4, 0).is_identity());
    CHECK(Permutation::from_cycles("id", 4, 0).is_identity());

    const Permutation c = Permutation::from_cycles("(0123)", 4, 0);
    for (int t = 0; t < 4; ++t) CHECK(c(t) == (t + 1) % 4);

    // separated symbols for wide ground sets
    const Permutation w = Permutation::from_cycles("(10 11)(0 9)", 12, 0);
    CHECK(w(10) == 11);
    CHECK(w(0) == 9);

    CHECK_THROWS_WITH_AS(Permutation::from_cycles("(121)", 3, 1), "symbol 1 repeated", Error);
    CHECK_THROWS_AS(Permutation::from_cycles("(05)", 4, 0), Error);
    CHECK_THROWS_AS(Permutation::from_cycles("(01", 4, 0), Error);
}

TEST_CASE("cycle round trip") {
    std::mt19937_64 rng(2);
    for (int n : {2, 5, 9, 13}) {
        for (int trial = 0; trial < 40; ++trial) {
            const Permutation p = test::random_perm(n, rng);
            CHECK(Permutation::from_cycles(p.to_cycles(), n, 0) == p);
            CHECK(Permutation::from_cycles(p.to_cycles(1), n, 1) == p);
        }
    }
}

TEST_CASE("permutation matrices") {
    const Permutation swap2 = Permutation::from_cycles("(01)", 2, 0);
    Eigen::MatrixXd want(2, 2);
    want << 0, 1, 1, 0;
    CHECK(swap2.matrix() == want);

    std::mt19937_64 rng(3);
    SUBCASE("homomorphism") {
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 7);
            const Permutation p = test::random_perm(n, rng);
            const Permutation q = test::random_perm(n, rng);
            CHECK(perm_matrix(p.compose(q)) == perm_matrix(p) * perm_matrix(q));
        }
    }

    SUBCASE("fixed points equal trace") {
        for (int trial = 0; trial < 200; ++trial) {
            const Permutation p = test::random_perm(6, rng);
            CHECK(p.matrix().trace() == doctest::Approx(p.fixed_points()));
        }
    }

    SUBCASE("trace orthogonality detects complete difference") {
        for (int trial = 0; trial < 500; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 5);
            const Permutation p = test::random_perm(n, rng);
            const Permutation q = test::random_perm(n, rng);
            const double t = (p.inverse().matrix() * q.matrix()).trace();
            CHECK((t == 0.0) == p.completely_different(q));
            CHECK((p.matrix().transpose() * q.matrix()).trace() == t);
        }
    }
}
