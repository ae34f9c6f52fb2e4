#include "doctest.h"

#include "histoq/entropy.hpp"
#include "histoq/records.hpp"
#include "histoq/spin.hpp"
#include "histoq/three_box.hpp"
#include "support/random_models.hpp"

using namespace histoq;

TEST_CASE("records from branches of an MD set verify, zero branches included") {
    const ThreeBoxModel m = three_box_model();
    const HistorySet set = three_box_four_set(m);  // one branch is exactly zero
    const RecordSet records = records_from_branches(m.psi, set);
    CHECK(records.aligned_count == set.size());
    const RecordReport report = verify_records(m.psi, set, records);
    CHECK(report.pass);
    CHECK(report.max_correlation_residual < 1e-12);
    CHECK(report.probability_residual < 1e-12);
    CHECK(report.probabilities_in_range);
}

TEST_CASE("trivial identity set records itself") {
    std::mt19937_64 rng(61);
    const StateVector psi = testing::random_state(rng, 3);
    std::vector<ClassOperator> members;
    members.push_back(ClassOperator::identity(3));
    const HistorySet set(std::move(members), {"I"});
    const RecordSet records{ProjectiveDecomposition::identity(3), 1};
    const RecordReport report = verify_records(psi, set, records);
    CHECK(report.pass);
}

TEST_CASE("non-MD set fails every candidate record set") {
    const StateVector psi = spin_state_vector({1.1, M_PI / 2.0});  // LP but not MD
    const HistorySet set = spin_history_set(SpinGeometry{M_PI / 3.0});
    CVector up(2), down(2);
    up << 1, 0;
    down << 0, 1;
    const RecordSet candidate{
        ProjectiveDecomposition({make_projector({up}), make_projector({down}), Projector::zero(2),
                                 Projector::zero(2)},
                                {"r0", "r1", "r2", "r3"}),
        4};
    const RecordReport report = verify_records(psi, set, candidate);
    CHECK(!report.pass);
    CHECK(report.max_correlation_residual > 1e-2);
}

TEST_CASE("records_from_branches refuses non-orthogonal branches") {
    const StateVector psi = spin_state_vector({1.1, M_PI / 2.0});
    const HistorySet set = spin_history_set(SpinGeometry{M_PI / 3.0});
    CHECK_THROWS_AS(records_from_branches(psi, set), InvalidInput);
}

TEST_CASE("records on generated MD sets imply the MD classification") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 20; ++trial) {
        const Eigen::Index dim = 3 + trial % 4;
        const auto dec = testing::random_decomposition(rng, dim);
        const Hamiltonian h(testing::random_hermitian(rng, dim));
        const HistorySet set = full_chain_set({{&dec, 1.0}}, h);  // single-time: MD by construction
        const StateVector psi = testing::random_state(rng, dim);
        const RecordSet records = records_from_branches(psi, set);
        const RecordReport report = verify_records(psi, set, records);
        CHECK(report.pass);
        CHECK(classify_set(psi, set).verdict == Verdict::MediumDecoherent);
    }
}

TEST_CASE("entropy: identity decomposition gives log dim") {
    std::mt19937_64 rng(63);
    for (Eigen::Index dim : {2, 3, 7}) {
        const StateVector psi = testing::random_state(rng, dim);
        CHECK(entropy(psi, ProjectiveDecomposition::identity(dim)) ==
              doctest::Approx(std::log(static_cast<double>(dim))).epsilon(1e-13));
    }
}

TEST_CASE("entropy: rank-1 basis containing the state gives zero") {
    std::mt19937_64 rng(64);
    const CMatrix q = testing::random_unitary(rng, 4);
    const StateVector psi{CVector(q.col(2))};
    CHECK(entropy(psi, ProjectiveDecomposition::from_orthonormal_basis(q)) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("entropy: two-level half-angle weights") {
    const double theta = 1.3;
    const StateVector psi = spin_state_vector({theta, 0.0});
    CVector up(2), down(2);
    up << 1, 0;
    down << 0, 1;
    const ProjectiveDecomposition dec({make_projector({up}), make_projector({down})});
    const double p = std::cos(theta / 2.0) * std::cos(theta / 2.0);
    const double expected = -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
    CHECK(entropy(psi, dec) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("entropy is invariant under relabeling") {
    std::mt19937_64 rng(65);
    const auto dec = testing::random_decomposition(rng, 5);
    const StateVector psi = testing::random_state(rng, 5);
    std::vector<Projector> reversed(dec.projectors().rbegin(), dec.projectors().rend());
    const ProjectiveDecomposition relabeled(std::move(reversed));
    CHECK(entropy(psi, dec) == doctest::Approx(entropy(psi, relabeled)).epsilon(1e-13));
}
