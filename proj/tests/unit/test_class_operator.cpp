#include "doctest.h"

#include "histoq/three_box.hpp"
#include "support/random_models.hpp"

using namespace histoq;

TEST_CASE("chain_class_operator: single step is the Heisenberg projector") {
    std::mt19937_64 rng(2);
    const auto dec = testing::random_decomposition(rng, 4);
    const Hamiltonian h(testing::random_hermitian(rng, 4));
    const ClassOperator c = chain_class_operator({{&dec, 1, 0.4}}, h);
    const Projector p = heisenberg_projector(dec[1], h, 0.4);
    CHECK(max_abs(CMatrix(c.matrix() - p.matrix())) < 1e-13);
    CHECK(c.is_chain());
}

TEST_CASE("chain_class_operator: identity-only steps give the identity") {
    const auto dec = ProjectiveDecomposition::identity(3);
    const Hamiltonian h = Hamiltonian::free(3);
    const ClassOperator c = chain_class_operator({{&dec, 0, 0.0}, {&dec, 0, 1.0}, {&dec, 0, 2.0}}, h);
    CHECK(max_abs(CMatrix(c.matrix() - CMatrix::Identity(3, 3))) < 1e-15);
}

TEST_CASE("chain_class_operator: explicit spin product, later time leftmost") {
    CVector up(2), diag(2);
    up << 1, 0;
    diag << 1, 1;
    const Projector p_z = make_projector({up});
    const Projector p_x = make_projector({diag});
    const ProjectiveDecomposition dz({p_z, Projector(CMatrix(CMatrix::Identity(2, 2) - p_z.matrix()))});
    const ProjectiveDecomposition dx({p_x, Projector(CMatrix(CMatrix::Identity(2, 2) - p_x.matrix()))});
    const Hamiltonian h = Hamiltonian::free(2);
    const ClassOperator c = chain_class_operator({{&dx, 0, 1.0}, {&dz, 0, 2.0}}, h);
    CHECK(max_abs(CMatrix(c.matrix() - p_z.matrix() * p_x.matrix())) < 1e-15);
}

TEST_CASE("chain_class_operator errors") {
    const auto dec = ProjectiveDecomposition::identity(2);
    const Hamiltonian h = Hamiltonian::free(2);
    CHECK_THROWS_AS(chain_class_operator({{&dec, 0, 1.0}, {&dec, 0, 1.0}}, h), InvalidInput);
    CHECK_THROWS_AS(chain_class_operator({{&dec, 2, 0.0}}, h), InvalidInput);
}

TEST_CASE("full_chain_set: two binary decompositions give four members summing to I") {
    std::mt19937_64 rng(9);
    const CMatrix q1 = testing::random_unitary(rng, 2);
    const CMatrix q2 = testing::random_unitary(rng, 2);
    const auto d1 = ProjectiveDecomposition::from_orthonormal_basis(q1);
    const auto d2 = ProjectiveDecomposition::from_orthonormal_basis(q2);
    const Hamiltonian h(testing::random_hermitian(rng, 2));
    const HistorySet set = full_chain_set({{&d1, 0.5}, {&d2, 1.5}}, h);
    CHECK(set.size() == 4);  // construction already verified the exhaustiveness invariant
}

TEST_CASE("full_chain_set: three-box sets have the advertised sizes and labels") {
    const ThreeBoxModel m = three_box_model();
    const HistorySet four = three_box_four_set(m);
    const HistorySet eight = three_box_eight_set(m);
    CHECK(four.size() == 4);
    CHECK(eight.size() == 8);
    CHECK(four.labels()[0] == "(Φ,A)");
    CHECK(eight.labels()[0] == "(Φ,A,B)");
}

TEST_CASE("full_chain_set: member cap") {
    const auto dec = ProjectiveDecomposition::identity(2);
    std::mt19937_64 rng(1);
    const auto big = testing::random_decomposition(rng, 2);
    const Hamiltonian h = Hamiltonian::free(2);
    std::vector<TimedDecomposition> timed;
    for (int i = 0; i < 4; ++i) timed.push_back({&big, 1.0 + i});
    CHECK_THROWS_AS(full_chain_set(std::span<const TimedDecomposition>(timed), h, 8), InvalidInput);
}

TEST_CASE("HistorySet rejects non-exhaustive members") {
    std::vector<ClassOperator> members;
    members.emplace_back(CMatrix(0.5 * CMatrix::Identity(2, 2)));
    CHECK_THROWS_AS(HistorySet{std::move(members)}, InvalidInput);
}
