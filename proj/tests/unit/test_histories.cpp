#include "doctest.h"

#include "histoq/conditionals.hpp"
#include "histoq/partition.hpp"
#include "histoq/spin.hpp"
#include "histoq/three_box.hpp"
#include "support/random_models.hpp"

using namespace histoq;

TEST_CASE("coarse_grain: one block collapses to the identity history") {
    std::mt19937_64 rng(51);
    const auto model = testing::random_chain_model(rng, 4);
    Partition all;
    all.blocks.push_back({});
    for (std::size_t i = 0; i < model.set.size(); ++i) all.blocks[0].push_back(static_cast<int>(i));
    const HistorySet coarse = coarse_grain(model.set, all);
    CHECK(coarse.size() == 1);
    CHECK(max_abs(CMatrix(coarse[0].matrix() - CMatrix::Identity(4, 4))) < 1e-12);
}

TEST_CASE("coarse_grain: singleton blocks reproduce the set") {
    std::mt19937_64 rng(52);
    const auto model = testing::random_chain_model(rng, 3);
    Partition singletons;
    for (std::size_t i = 0; i < model.set.size(); ++i)
        singletons.blocks.push_back({static_cast<int>(i)});
    const HistorySet same = coarse_grain(model.set, singletons);
    REQUIRE(same.size() == model.set.size());
    for (std::size_t i = 0; i < same.size(); ++i)
        CHECK(max_abs(CMatrix(same[i].matrix() - model.set[i].matrix())) < 1e-14);
}

TEST_CASE("coarse_grain: summing the eight-member three-box set over B gives the four-member set") {
    const ThreeBoxModel m = three_box_model();
    const HistorySet eight = three_box_eight_set(m);
    const HistorySet four = three_box_four_set(m);
    // eight-set odometer order: B fastest, then A, then Phi
    Partition over_b;
    for (int phi = 0; phi < 2; ++phi)
        for (int a = 0; a < 2; ++a) over_b.blocks.push_back({a * 2 + phi * 4, 1 + a * 2 + phi * 4});
    const HistorySet regrouped = coarse_grain(eight, over_b);
    REQUIRE(regrouped.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(max_abs(CMatrix(regrouped[i].matrix() - four[i].matrix())) < 1e-14);
}

TEST_CASE("coarse_grain rejects invalid partitions") {
    std::mt19937_64 rng(53);
    const auto model = testing::random_chain_model(rng, 3);
    Partition bad;
    bad.blocks.push_back({0});
    CHECK_THROWS_AS(coarse_grain(model.set, bad), InvalidInput);  // not covering
    Partition overlap;
    overlap.blocks.push_back({0, 1});
    for (std::size_t i = 1; i < model.set.size(); ++i)
        overlap.blocks.push_back({static_cast<int>(i)});
    CHECK_THROWS_AS(coarse_grain(model.set, overlap), InvalidInput);
}

TEST_CASE("verify_sum_rules: passes on the non-positive three-box set") {
    const ThreeBoxModel m = three_box_model();
    const HistorySet eight = three_box_eight_set(m);
    Partition part;
    part.blocks = {{0, 3, 5}, {1, 2}, {4, 6, 7}};
    const SumRuleReport report = verify_sum_rules(m.psi, eight, part);
    CHECK(report.pass);
    CHECK(report.max_residual < 1e-12);
}

TEST_CASE("verify_sum_rules: single block checks total normalization") {
    std::mt19937_64 rng(54);
    const auto model = testing::random_chain_model(rng, 4);
    Partition all;
    all.blocks.push_back({});
    for (std::size_t i = 0; i < model.set.size(); ++i) all.blocks[0].push_back(static_cast<int>(i));
    const SumRuleReport report = verify_sum_rules(model.psi, model.set, all);
    CHECK(report.pass);
}

TEST_CASE("verify_sum_rules: random sets and partitions") {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 60; ++trial) {
        const auto model = testing::random_chain_model(rng, 2 + trial % 5);
        const Partition part = testing::random_partition(rng, model.set.size());
        const SumRuleReport report = verify_sum_rules(model.psi, model.set, part);
        CHECK(report.pass);
    }
}

TEST_CASE("conditional_probability: three-box conditionals, virtual ones included") {
    const ThreeBoxModel m = three_box_model();
    const ClassOperator phi(m.p_phi.matrix());
    const ClassOperator phi_a(CMatrix(m.p_phi.matrix() * m.p_a.matrix()));
    CHECK(conditional_probability(m.psi, phi_a, phi) == doctest::Approx(1.0).epsilon(1e-13));

    const ClassOperator phi_abar_bbar(
        CMatrix(m.p_phi.matrix() * m.p_a_bar.matrix() * m.p_b_bar.matrix()));
    CHECK(conditional_probability(m.psi, phi_abar_bbar, phi) == doctest::Approx(-1.0).epsilon(1e-13));

    const ClassOperator phi_c(CMatrix(m.p_phi.matrix() * m.p_c.matrix()));
    CHECK(conditional_probability(m.psi, phi_c, phi) == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("conditional_probability: zero-probability conditioning is an explicit error") {
    const ThreeBoxModel m = three_box_model();
    CVector orth(3);
    orth << 1, -1, 0;  // orthogonal to psi
    const ClassOperator cond(make_projector({orth}).matrix());
    CHECK_THROWS_AS(conditional_probability(m.psi, ClassOperator::identity(3), cond), InvalidInput);
}

TEST_CASE("chain_future_probability: three-box future conditionals chain through virtual values") {
    const ThreeBoxModel m = three_box_model();
    const Hamiltonian h = Hamiltonian::free(3);

    std::vector<ClassOperator> future_members;
    future_members.emplace_back(m.p_a.matrix());
    future_members.emplace_back(m.p_a_bar.matrix());
    const HistorySet future(std::move(future_members), {"A_future", "notA_future"});

    std::vector<ClassOperator> past_members;
    past_members.emplace_back(m.p_a.matrix());
    past_members.emplace_back(m.p_b.matrix());
    past_members.emplace_back(m.p_c.matrix());
    const HistorySet past(std::move(past_members), {"A_past", "B_past", "C_past"});

    const auto rows = chain_future_probability(m.psi, future, past, ClassOperator(m.p_phi.matrix()));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].direct == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rows[0].chained == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rows[1].direct == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(std::abs(rows[1].chained) < 1e-12);
}

TEST_CASE("chain_future_probability: trivial past set makes chained identical to direct") {
    std::mt19937_64 rng(56);
    const auto model = testing::random_chain_model(rng, 4, 2);
    std::vector<ClassOperator> trivial;
    trivial.push_back(ClassOperator::identity(4));
    const HistorySet past(std::move(trivial), {"I"});
    const ClassOperator cond(model.set[0].matrix());
    if (std::abs(candidate_probability(model.psi, cond)) > 0.05) {
        const auto rows = chain_future_probability(model.psi, model.set, past, cond);
        for (const auto& row : rows) CHECK(row.direct == doctest::Approx(row.chained).epsilon(1e-12));
    }
}

TEST_CASE("chain_future_probability: direct equals chained on random models") {
    std::mt19937_64 rng(57);
    int done = 0;
    while (done < 30) {
        const Eigen::Index dim = 3 + done % 3;
        const Hamiltonian h(testing::random_hermitian(rng, dim));
        const auto past_dec = testing::random_decomposition(rng, dim);
        const auto future_dec = testing::random_decomposition(rng, dim);
        const auto cond_dec = testing::random_decomposition(rng, dim);
        const StateVector psi = testing::random_state(rng, dim);
        const HistorySet past = full_chain_set({{&past_dec, 1.0}}, h);
        const HistorySet future = full_chain_set({{&future_dec, 3.0}}, h);
        const ClassOperator cond(h.evolve_heisenberg(cond_dec[0].matrix(), 2.0));
        if (std::abs(candidate_probability(psi, cond)) < 0.01) continue;
        bool intermediates_ok = true;
        for (std::size_t b = 0; b < past.size() && intermediates_ok; ++b)
            if (std::abs(candidate_probability(psi, Operator(cond.matrix() * past[b].matrix()))) < 0.01)
                intermediates_ok = false;
        if (!intermediates_ok) continue;
        ++done;
        for (const auto& row : chain_future_probability(psi, future, past, cond))
            CHECK(std::abs(row.direct - row.chained) < 1e-10);
    }
}

TEST_CASE("prediction_conditional: empty future and orthogonal future") {
    std::mt19937_64 rng(58);
    const Eigen::Index dim = 4;
    const Hamiltonian h(testing::random_hermitian(rng, dim));
    const auto dec = testing::random_decomposition(rng, dim);
    const StateVector psi = testing::random_state(rng, dim);
    const std::vector<ChainStepSpec> realized{{&dec, 0, 1.0}};
    CHECK(prediction_conditional(psi, realized, {}, h) == doctest::Approx(1.0));

    // a later alternative from the same conserved decomposition, different block
    const Hamiltonian free_h = Hamiltonian::free(dim);
    const std::vector<ChainStepSpec> realized_free{{&dec, 0, 1.0}};
    const std::vector<ChainStepSpec> future_orth{{&dec, 1, 2.0}};
    CHECK(prediction_conditional(psi, realized_free, future_orth, free_h) ==
          doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("prediction_conditional: spin chain gives the half-angle law") {
    const double delta = 0.9;
    const Projector p1 = spin_projector(0.0, std::sin(delta), std::cos(delta), true);
    const Projector p2 = spin_projector(0.0, 0.0, 1.0, true);
    const ProjectiveDecomposition d1({p1, Projector(CMatrix(CMatrix::Identity(2, 2) - p1.matrix()))});
    const ProjectiveDecomposition d2({p2, Projector(CMatrix(CMatrix::Identity(2, 2) - p2.matrix()))});
    const Hamiltonian h = Hamiltonian::free(2);
    // state aligned with n1: realized branch is the n1-up state itself
    const StateVector psi = spin_state_vector({delta, 0.0});
    const std::vector<ChainStepSpec> realized{{&d1, 0, 1.0}};
    const std::vector<ChainStepSpec> future{{&d2, 0, 2.0}};
    const double expected = std::cos(delta / 2.0) * std::cos(delta / 2.0);
    CHECK(prediction_conditional(psi, realized, future, h) == doctest::Approx(expected).epsilon(1e-12));
    // results stay inside [0, 1]
    CHECK(prediction_conditional(psi, realized, future, h) <= 1.0 + 1e-12);
}

TEST_CASE("prediction_conditional: zero-norm realized branch is an error") {
    const ThreeBoxModel m = three_box_model();
    CVector orth(3);
    orth << 1, -1, 0;
    const Projector p = make_projector({orth});
    const ProjectiveDecomposition dec({p, Projector(CMatrix(CMatrix::Identity(3, 3) - p.matrix()))});
    const std::vector<ChainStepSpec> realized{{&dec, 0, 1.0}};
    CHECK_THROWS_AS(prediction_conditional(m.psi, realized, {}, m.h), InvalidInput);
}
