#pragma once
// gates.hpp
// Constructors for every unitary the protocol uses: the two beam splitters,
// the in-channel spin flipper, CNOT, the Stern-Gerlach basis rotation, and
// the single-qubit correction gates.

#include "pathswap/svcore.hpp"

namespace pathswap {

enum class PathChannel { Transmitted, Reflected };

std::string_view channel_label(PathChannel c);     // "T" / "R"
PathChannel parse_channel(std::string_view text);  // accepts "T" or "R"

// Real transmission/reflection amplitudes with alpha^2 + beta^2 = 1.
struct BeamSplitterParams {
    double alpha;
    double beta;

    BeamSplitterParams(double alpha, double beta);      // validates
    static BeamSplitterParams from_alpha(double alpha); // beta = sqrt(1 - alpha^2)
};

// |T> -> alpha|T> + i beta|R>, |R> -> i beta|T> + alpha|R>. The incoming mode
// occupies the T basis slot; the second column is fixed by unitarity.
GateMatrix beam_splitter_bs1(const BeamSplitterParams& params);

// 50-50 recombiner: |T> -> (i|T'> + |R'>)/sqrt2, |R> -> (|T'> + i|R'>)/sqrt2.
// Uses a different phase convention than BS1 on purpose.
GateMatrix beam_splitter_bs2();

// Path-controlled NOT on (p, s): sigma_x on the spin when the path occupies
// flip_channel, identity otherwise.
GateMatrix spin_flipper(PathChannel flip_channel);

// Standard CNOT; the first target slot is the control.
GateMatrix cnot();

// |0> -> (|0>+|1>)/sqrt2, |1> -> (|0>-|1>)/sqrt2; self-inverse.
GateMatrix sg_rotation();

GateMatrix phase_s();  // diag(1, i)
GateMatrix pauli_z();  // diag(1, -1)
GateMatrix pauli_x();

GateMatrix identity_gate(int num_slots = 1);

}  // namespace pathswap
