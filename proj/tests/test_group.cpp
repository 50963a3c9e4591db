#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dgt/group.hpp"
#include "dgt/rng.hpp"

using namespace dgt;

TEST_CASE("multiplication rule") {
    CHECK(multiply(make_element(0, 1, 4), make_element(0, 2, 4)) ==
          make_element(0, 3, 4));
    CHECK(multiply(make_element(0, 1, 4), make_element(1, 2, 4)) ==
          make_element(1, 1, 4));
    // reflections are involutions: (s r^3)^2 = e in D_8
    CHECK(multiply(make_element(1, 3, 8), make_element(1, 3, 8)) == identity(8));
    CHECK_THROWS_AS(multiply(identity(4), identity(8)), std::domain_error);
}

TEST_CASE("inverse") {
    CHECK(inverse(make_element(0, 1, 4)) == make_element(0, 3, 4));
    CHECK(inverse(make_element(1, 5, 8)) == make_element(1, 5, 8));
    CHECK(inverse(identity(4)) == identity(4));
    for (int N : {2, 4, 8, 16})
        for (int i = 0; i < 2 * N; ++i) {
            const GroupElement g = element_from_index(i, N);
            CHECK(multiply(g, inverse(g)) == identity(N));
        }
}

TEST_CASE("identity construction") {
    CHECK(identity(4) == make_element(0, 0, 4));
    CHECK(identity(8) == make_element(0, 0, 8));
    CHECK(identity(2) == make_element(0, 0, 2));
    CHECK_THROWS_AS(identity(3), std::domain_error);
    CHECK_THROWS_AS(identity(0), std::domain_error);
}

TEST_CASE("fundamental representation") {
    CHECK((fundamental_rep(identity(8)) - Eigen::Matrix2cd::Identity()).norm() ==
          doctest::Approx(0.0));
    const Eigen::Matrix2cd r2 = fundamental_rep(make_element(0, 2, 4));
    CHECK(std::abs(r2(0, 0) - Complex(-1, 0)) < 1e-14);
    CHECK(std::abs(r2(1, 1) - Complex(-1, 0)) < 1e-14);
    Eigen::Matrix2cd x;
    x << 0, 1, 1, 0;
    CHECK((fundamental_rep(make_element(1, 0, 4)) - x).norm() < 1e-14);

    // unitarity
    for (int i = 0; i < 16; ++i) {
        const Eigen::Matrix2cd u = fundamental_rep(element_from_index(i, 8));
        CHECK((u * u.adjoint() - Eigen::Matrix2cd::Identity()).norm() < 1e-14);
    }
}

TEST_CASE("real trace") {
    CHECK(re_trace(identity(4)) == doctest::Approx(2.0));
    CHECK(re_trace(identity(16)) == doctest::Approx(2.0));
    CHECK(re_trace(make_element(0, 2, 4)) == doctest::Approx(-2.0));
    for (int k = 0; k < 8; ++k) CHECK(re_trace(make_element(1, k, 8)) == 0.0);
    for (int i = 0; i < 32; ++i) {
        const GroupElement g = element_from_index(i, 16);
        CHECK(std::abs(re_trace(g) - fundamental_rep(g).trace().real()) < 1e-14);
    }
}

TEST_CASE("irrep values") {
    CHECK(irrep_value({IrrepKind::B}, make_element(1, 0, 8)) == Complex(-1, 0));
    CHECK(irrep_value({IrrepKind::C}, make_element(0, 3, 8)) == Complex(-1, 0));
    CHECK((two_dim_irrep(1, identity(8)) - Eigen::Matrix2cd::Identity()).norm() <
          1e-14);
    CHECK_THROWS_AS(two_dim_irrep(0, identity(8)), std::domain_error);
    CHECK_THROWS_AS(two_dim_irrep(4, identity(8)), std::domain_error);
    // label census: four 1-d plus 4(N/2 - 1) entries, sum d^2 = 2N
    for (int N : {2, 4, 8, 16}) {
        const auto labels = irrep_labels(N);
        CHECK(static_cast<int>(labels.size()) == 2 * N);
        int dim_sq = 4; // four 1-d irreps
        for (int l = 1; l < N / 2; ++l) dim_sq += 4;
        CHECK(dim_sq == 2 * N);
    }
}

TEST_CASE("encode and decode") {
    CHECK(encode(make_element(1, 2, 4)) == "110");
    CHECK(encode(make_element(0, 0, 2)) == "00");
    CHECK(encode(make_element(0, 5, 8)) == "0101");
    for (int N : {2, 4, 8})
        for (int i = 0; i < 2 * N; ++i) {
            const GroupElement g = element_from_index(i, N);
            CHECK(decode(encode(g), N) == g);
        }
    CHECK_THROWS_AS(decode("10", 4), std::domain_error);
    CHECK_THROWS_AS(decode("1x0", 4), std::domain_error);
}

TEST_CASE("group table") {
    // D_2 is the Klein four-group: elements e, r, s, sr, all self-inverse.
    const Eigen::MatrixXi t = group_table(2);
    Eigen::MatrixXi klein(4, 4);
    klein << 0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0;
    CHECK(t == klein);

    for (int N : {2, 4, 8}) {
        const Eigen::MatrixXi table = group_table(N);
        for (int j = 0; j < 2 * N; ++j) CHECK(table(0, j) == j); // identity row
        // every row and column is a permutation
        for (int i = 0; i < 2 * N; ++i) {
            std::vector<bool> seen_row(2 * N, false), seen_col(2 * N, false);
            for (int j = 0; j < 2 * N; ++j) {
                CHECK(!seen_row[table(i, j)]);
                CHECK(!seen_col[table(j, i)]);
                seen_row[table(i, j)] = true;
                seen_col[table(j, i)] = true;
            }
        }
        // closure under inverses: g * g^-1 lands on the identity column
        for (int i = 0; i < 2 * N; ++i) {
            const int inv = element_index(inverse(element_from_index(i, N)));
            CHECK(table(i, inv) == 0);
        }
    }
}

TEST_CASE("associativity") {
    for (int N : {2, 4, 8})
        for (int a = 0; a < 2 * N; ++a)
            for (int b = 0; b < 2 * N; ++b)
                for (int c = 0; c < 2 * N; ++c) {
                    const GroupElement ga = element_from_index(a, N);
                    const GroupElement gb = element_from_index(b, N);
                    const GroupElement gc = element_from_index(c, N);
                    CHECK(multiply(multiply(ga, gb), gc) ==
                          multiply(ga, multiply(gb, gc)));
                }
    CounterRng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const GroupElement a = element_from_index(static_cast<int>(rng.next_below(32)), 16);
        const GroupElement b = element_from_index(static_cast<int>(rng.next_below(32)), 16);
        const GroupElement c = element_from_index(static_cast<int>(rng.next_below(32)), 16);
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("fundamental representation is a homomorphism") {
    for (int N : {2, 4, 8, 16})
        for (int i = 0; i < 2 * N; ++i)
            for (int j = 0; j < 2 * N; ++j) {
                const GroupElement g = element_from_index(i, N);
                const GroupElement h = element_from_index(j, N);
                const Eigen::Matrix2cd lhs = fundamental_rep(multiply(g, h));
                const Eigen::Matrix2cd rhs = fundamental_rep(g) * fundamental_rep(h);
                CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
            }
}

TEST_CASE("Schur orthogonality of irrep entries") {
    for (int N : {4, 8}) {
        const auto labels = irrep_labels(N);
        for (std::size_t a = 0; a < labels.size(); ++a)
            for (std::size_t b = 0; b < labels.size(); ++b) {
                Complex inner = 0.0;
                for (int i = 0; i < 2 * N; ++i) {
                    const GroupElement g = element_from_index(i, N);
                    inner += irrep_value(labels[a], g) *
                             std::conj(irrep_value(labels[b], g));
                }
                if (a == b) {
                    const double expect = 2.0 * N / irrep_dimension(labels[a]);
                    CHECK(std::abs(inner - expect) < 1e-12);
                } else {
                    CHECK(std::abs(inner) < 1e-12);
                }
            }
    }
}
