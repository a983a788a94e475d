#pragma once
// analysis.hpp
// Bipartite entanglement measures for pure states: Schmidt decomposition,
// two-qubit concurrence, entanglement entropy, and purity of reduced states.

#include "pathswap/svcore.hpp"

namespace pathswap {

struct SchmidtDecomposition {
    std::vector<double> coefficients;     // descending, sum of squares = 1
    std::vector<StateVector> left_basis;  // orthonormal, over the left slots
    std::vector<StateVector> right_basis; // orthonormal, over the right slots
};

// left must be a nonempty proper subset of the state's slots.
SchmidtDecomposition schmidt(const StateVector& state, const std::vector<Slot>& left);

// C = 2|a00 a11 - a01 a10| for a pure two-slot state.
double concurrence_2q(const StateVector& state);

// Von Neumann entropy of the bipartition, in bits; 0 log 0 := 0.
double entanglement_entropy(const StateVector& state, const std::vector<Slot>& left);

// tr(rho^2); rejects non-Hermitian input.
double purity(const DensityMatrix& rho);

}  // namespace pathswap
