#pragma once

#include "histoq/class_operator.hpp"
#include "histoq/state.hpp"

namespace histoq {

/// The three-box model: a particle in one of three boxes A, B, C, prepared in
/// (|A>+|B>+|C>)/sqrt(3) and later asked about the state (|A>+|B>-|C>)/sqrt(3).
/// Free Hamiltonian; only the ordering of the questions matters.
struct ThreeBoxModel {
    StateVector psi;        // initial state
    StateVector phi_state;  // final alternative
    Projector p_phi, p_phi_bar;
    Projector p_a, p_a_bar;
    Projector p_b, p_b_bar;
    Projector p_c, p_c_bar;
    Hamiltonian h;

    ProjectiveDecomposition phi_decomposition() const;  // {Phi, not-Phi}
    ProjectiveDecomposition a_decomposition() const;    // {A, not-A}
    ProjectiveDecomposition b_decomposition() const;    // {B, not-B}
    ProjectiveDecomposition box_decomposition() const;  // {A, B, C}
};

ThreeBoxModel three_box_model();

/// Four histories: box-A alternative then the Phi alternative. Medium
/// decoherent; probabilities {1/9, 0, 2/9, 2/3}.
HistorySet three_box_four_set(const ThreeBoxModel& m);

/// Eight histories refining the above by the box-B alternative. Not even
/// linearly positive: one candidate probability is -1/9.
HistorySet three_box_eight_set(const ThreeBoxModel& m);

}  // namespace histoq
