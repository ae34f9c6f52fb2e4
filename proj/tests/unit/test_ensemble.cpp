#include "doctest.h"

#include <unsupported/Eigen/KroneckerProduct>

#include "histoq/ensemble.hpp"
#include "support/random_models.hpp"

using namespace histoq;

TEST_CASE("ensemble_candidate_probability: real amplitude gives binomial branches") {
    for (int n_total : {1, 5, 33}) {
        for (int n_c = 0; n_c <= n_total; ++n_c) {
            const double p = ensemble_candidate_probability({cdouble(0.5, 0.0), n_total, n_c});
            CHECK(p == doctest::Approx(std::pow(2.0, -n_total)).epsilon(1e-12));
        }
    }
}

TEST_CASE("ensemble_candidate_probability: N = 1 pair sums to one") {
    const cdouble z = std::polar(0.7, 1.1);
    const double p1 = ensemble_candidate_probability({z, 1, 1});
    const double p0 = ensemble_candidate_probability({z, 1, 0});
    CHECK(p1 == doctest::Approx(z.real()).epsilon(1e-14));
    CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("ensemble_candidate_probability: all-C history at N = 3 goes negative") {
    const cdouble z = std::polar(0.5, M_PI / 4.0);
    const double p = ensemble_candidate_probability({z, 3, 3});
    CHECK(p == doctest::Approx(0.125 * std::cos(3.0 * M_PI / 4.0)).epsilon(1e-13));
    CHECK(p == doctest::Approx(-0.08838834764831845).epsilon(1e-11));
}

TEST_CASE("ensemble_candidate_probability edge amplitudes") {
    CHECK(ensemble_candidate_probability({cdouble(0.0, 0.0), 4, 0}) == doctest::Approx(1.0));
    CHECK(ensemble_candidate_probability({cdouble(0.0, 0.0), 4, 2}) == doctest::Approx(0.0));
    CHECK(ensemble_candidate_probability({cdouble(1.0, 0.0), 4, 4}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(ensemble_candidate_probability({cdouble(0.5, 0.0), 3, 4}), InvalidInput);
}

TEST_CASE("ensemble probabilities sum to one over full fine-grained config count") {
    const cdouble z = std::polar(0.6, 0.9);
    for (int n_total : {2, 5, 9}) {
        double sum = 0.0;
        double binom = 1.0;
        for (int n_c = 0; n_c <= n_total; ++n_c) {
            sum += binom * ensemble_candidate_probability({z, n_total, n_c});
            binom = binom * (n_total - n_c) / (n_c + 1.0);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("ensemble_positivity_horizon: real amplitudes never fail") {
    for (double a : {0.1, 0.5, 0.9}) {
        const auto horizon = ensemble_positivity_horizon(cdouble(a, 0.0), 200);
        CHECK(!horizon.horizon.has_value());
    }
}

TEST_CASE("ensemble_positivity_horizon: the pi/4 phase fails first at N = 3") {
    const auto horizon = ensemble_positivity_horizon(std::polar(0.5, M_PI / 4.0), 50);
    REQUIRE(horizon.horizon.has_value());
    CHECK(*horizon.horizon == 3);
    CHECK(horizon.witness_n_c == 3);
    CHECK(horizon.witness_value == doctest::Approx(-0.08838834764831845).epsilon(1e-10));
}

TEST_CASE("ensemble_positivity_horizon: boundary zero at N = 1 is not a failure") {
    // Re z = 0 exactly for phi = pi/2; the first strict failure shows at N = 2.
    const auto horizon = ensemble_positivity_horizon(std::polar(0.9, M_PI / 2.0), 10);
    REQUIRE(horizon.horizon.has_value());
    CHECK(*horizon.horizon == 2);
    CHECK(horizon.witness_value == doctest::Approx(-0.81).epsilon(1e-12));
}

namespace {

// Explicit tensor-product history of an N-copy ensemble, dim-2 subsystems.
double tensor_oracle(const CMatrix& c1, const CVector& psi, int n_total, int n_c) {
    const CMatrix c2 = CMatrix::Identity(2, 2) - c1;
    CMatrix op = CMatrix::Identity(1, 1);
    CVector state = CVector::Ones(1);
    for (int i = 0; i < n_total; ++i) {
        const CMatrix& factor = i < n_c ? c1 : c2;
        op = Eigen::kroneckerProduct(op, factor).eval();
        state = Eigen::kroneckerProduct(state, psi).eval();
    }
    return state.dot(op * state).real();
}

}  // namespace

TEST_CASE("scalar ensemble formula matches the explicit tensor product for N <= 6") {
    CVector psi(2);
    psi << 1, 0;
    CMatrix c1(2, 2);
    const cdouble z = std::polar(0.5, M_PI / 4.0);
    c1 << z, cdouble(0.7, -0.1), cdouble(0.2, 0.3), cdouble(0.4, 0.1);
    for (int n_total = 1; n_total <= 6; ++n_total) {
        for (int n_c = 0; n_c <= n_total; ++n_c) {
            const double scalar = ensemble_candidate_probability({z, n_total, n_c});
            CHECK(std::abs(scalar - tensor_oracle(c1, psi, n_total, n_c)) < 1e-10);
        }
    }
}

TEST_CASE("product_history_probability: real factors factorize, complex ones do not") {
    std::mt19937_64 rng(71);
    const StateVector psi1 = testing::random_state(rng, 2);
    const StateVector psi2 = testing::random_state(rng, 2);

    // real factors: diagonal projector pieces
    CVector up(2);
    up << 1, 0;
    const ClassOperator proj(make_projector({up}).matrix());
    std::vector<std::pair<StateVector, ClassOperator>> real_pair{{psi1, proj}, {psi2, proj}};
    const auto r = product_history_probability(std::span(real_pair));
    CHECK(r.lp_joint == doctest::Approx(r.lp_product_of_marginals).epsilon(1e-13));

    // two factors of 0.5 e^{i pi/3}
    const cdouble z = std::polar(0.5, M_PI / 3.0);
    CMatrix c(2, 2);
    c << z, 0.3, 0.1, 0.2;
    CVector e0(2);
    e0 << 1, 0;
    const StateVector ground{e0};
    std::vector<std::pair<StateVector, ClassOperator>> complex_pair{{ground, ClassOperator(c)},
                                                                    {ground, ClassOperator(c)}};
    const auto q = product_history_probability(std::span(complex_pair));
    CHECK(q.lp_joint == doctest::Approx(-0.125).epsilon(1e-13));
    CHECK(q.lp_product_of_marginals == doctest::Approx(0.0625).epsilon(1e-13));
}

TEST_CASE("product_history_probability: branch-norm rule matches the tensor product") {
    std::mt19937_64 rng(72);
    const StateVector psi1 = testing::random_state(rng, 2);
    const StateVector psi2 = testing::random_state(rng, 2);
    const CMatrix c1 = testing::random_hermitian(rng, 2);
    const CMatrix c2 = testing::random_hermitian(rng, 2);
    std::vector<std::pair<StateVector, ClassOperator>> pair{{psi1, ClassOperator(c1)},
                                                            {psi2, ClassOperator(c2)}};
    const auto result = product_history_probability(std::span(pair));

    const CMatrix joint = Eigen::kroneckerProduct(c1, c2).eval();
    const CVector state = Eigen::kroneckerProduct(psi1.amplitudes(), psi2.amplitudes()).eval();
    CHECK(result.md_joint == doctest::Approx((joint * state).squaredNorm()).epsilon(1e-12));
    CHECK(result.lp_joint == doctest::Approx(state.dot(joint * state).real()).epsilon(1e-12));
}
