#include "histoq/three_box.hpp"

#include <cmath>

namespace histoq {

namespace {

CVector unit3(double a, double b, double c) {
    CVector v(3);
    v << a, b, c;
    return v / v.norm();
}

}  // namespace

ThreeBoxModel three_box_model() {
    const CVector psi = unit3(1, 1, 1);
    const CVector phi = unit3(1, 1, -1);
    CVector ea = CVector::Zero(3), eb = CVector::Zero(3), ec = CVector::Zero(3);
    ea(0) = 1;
    eb(1) = 1;
    ec(2) = 1;

    const Projector p_phi = make_projector({phi});
    const Projector p_a = make_projector({ea});
    const Projector p_b = make_projector({eb});
    const Projector p_c = make_projector({ec});
    const CMatrix id = CMatrix::Identity(3, 3);

    return ThreeBoxModel{
        StateVector(psi),
        StateVector(phi),
        p_phi,
        Projector(id - p_phi.matrix()),
        p_a,
        Projector(id - p_a.matrix()),
        p_b,
        Projector(id - p_b.matrix()),
        p_c,
        Projector(id - p_c.matrix()),
        Hamiltonian::free(3),
    };
}

ProjectiveDecomposition ThreeBoxModel::phi_decomposition() const {
    return ProjectiveDecomposition({p_phi, p_phi_bar}, {"Φ", "Φ̄"});
}

ProjectiveDecomposition ThreeBoxModel::a_decomposition() const {
    return ProjectiveDecomposition({p_a, p_a_bar}, {"A", "Ā"});
}

ProjectiveDecomposition ThreeBoxModel::b_decomposition() const {
    return ProjectiveDecomposition({p_b, p_b_bar}, {"B", "B̄"});
}

ProjectiveDecomposition ThreeBoxModel::box_decomposition() const {
    return ProjectiveDecomposition({p_a, p_b, p_c}, {"A", "B", "C"});
}

HistorySet three_box_four_set(const ThreeBoxModel& m) {
    const ProjectiveDecomposition a = m.a_decomposition();
    const ProjectiveDecomposition phi = m.phi_decomposition();
    return full_chain_set({{&a, 1.0}, {&phi, 2.0}}, m.h);
}

HistorySet three_box_eight_set(const ThreeBoxModel& m) {
    const ProjectiveDecomposition b = m.b_decomposition();
    const ProjectiveDecomposition a = m.a_decomposition();
    const ProjectiveDecomposition phi = m.phi_decomposition();
    return full_chain_set({{&b, 1.0}, {&a, 2.0}, {&phi, 3.0}}, m.h);
}

}  // namespace histoq
