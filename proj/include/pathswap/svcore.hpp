#pragma once
// svcore.hpp
// Dense state-vector engine over the labeled four-slot register [p, s, q2, q3]:
// tensor products, unitary application, projective measurement, partial trace,
// fidelity. All values are immutable after construction; every operation
// returns a new value, so sharing across threads needs no coordination.

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace pathswap {

using Amplitude = std::complex<double>;

// Absolute tolerance for amplitude-level equality.
inline constexpr double kTol = 1e-12;
// Norm drift beyond this triggers renormalization.
inline constexpr double kRenormThreshold = 1e-13;
// Measurement branches below this weight are reported as zero-probability.
inline constexpr double kZeroBranchProbability = 1e-18;

inline constexpr Amplitude kI{0.0, 1.0};

// Register slots in fixed order: interferometer path, carrier spin, and the
// two distant spins. The path slot indexes 0 = transmitted channel and
// 1 = reflected channel (primed channels after recombination); spin slots
// index 0 = |0> (up along z) and 1 = |1> (down).
enum class Slot : int { Path = 0, Spin = 1, Q2 = 2, Q3 = 3 };

inline constexpr std::array<Slot, 4> kRegisterOrder{Slot::Path, Slot::Spin,
                                                    Slot::Q2, Slot::Q3};

inline constexpr int kChannelT = 0;  // transmitted
inline constexpr int kChannelR = 1;  // reflected
inline constexpr int kSpinUp = 0;
inline constexpr int kSpinDown = 1;

std::string_view slot_label(Slot slot);

// Basis-state label for one slot, e.g. "T" / "R'" / "0" / "1".
std::string basis_state_label(Slot slot, int index, bool primed_path = false);

// Assigns a basis index to slots, e.g. {{Slot::Path, kChannelT}, {Slot::Spin, 0}}.
using BasisLabel = std::vector<std::pair<Slot, int>>;

// %.17g — full double precision, round-trips exactly through strtod.
std::string format_double(double value);

// Unitary matrix on one or two register slots; unitarity and finiteness are
// checked at construction.
class GateMatrix {
public:
    GateMatrix(std::string name, Eigen::MatrixXcd entries);

    const std::string& name() const { return name_; }
    Eigen::Index dim() const { return entries_.rows(); }
    int num_slots() const { return num_slots_; }
    const Eigen::MatrixXcd& entries() const { return entries_; }

private:
    std::string name_;
    Eigen::MatrixXcd entries_;
    int num_slots_ = 0;
};

// Normalized pure state over an ordered subset of the register. The first
// listed slot is the most significant bit of the amplitude index.
class StateVector {
public:
    // Slots must be unique and in register order; amplitudes must be finite
    // and nonzero overall. Renormalizes when the norm drifted beyond
    // kRenormThreshold.
    StateVector(std::vector<Slot> slots, std::vector<Amplitude> amps);

    // |bits[0] bits[1] ...> over the given slots.
    static StateVector basis(std::vector<Slot> slots, const std::vector<int>& bits);

    const std::vector<Slot>& slots() const { return slots_; }
    const std::vector<Amplitude>& amps() const { return amps_; }
    std::size_t dim() const { return amps_.size(); }
    int num_slots() const { return static_cast<int>(slots_.size()); }

    bool has_slot(Slot slot) const;
    int slot_position(Slot slot) const;  // throws if the slot is absent

    double norm() const;

    // Nonzero amplitudes as (label, value) pairs in index order.
    std::vector<std::pair<BasisLabel, Amplitude>>
    nonzero_amplitudes(double cutoff = kTol) const;

private:
    std::vector<Slot> slots_;
    std::vector<Amplitude> amps_;
};

// One branch of a projective measurement. Zero-probability branches carry
// probability 0 and no post-state.
struct MeasurementBranch {
    int outcome = 0;
    double probability = 0.0;
    std::optional<StateVector> post_state;
};

// Reduced state produced by partial_trace.
class DensityMatrix {
public:
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    Eigen::Index dim() const { return entries_.rows(); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    double trace_real() const;
    bool is_hermitian(double tol = kTol) const;

private:
    Eigen::MatrixXcd entries_;
};

// Product state over the disjoint union of the arguments' slots, reordered
// into register order.
StateVector tensor_product(const StateVector& a, const StateVector& b);

// Applies g to the targeted slots (first target = most significant gate bit),
// identity elsewhere.
StateVector apply_unitary(const StateVector& state, const GateMatrix& g,
                          const std::vector<Slot>& targets);

// Convention-independent amplitude readout; the label must assign an index to
// every present slot exactly once.
Amplitude amplitude(const StateVector& state, const BasisLabel& label);

// Measures one slot in its own basis and removes it from the register.
// Post-states are renormalized and phase-canonical: the first amplitude of
// magnitude above 1e-9 is rotated to be real and positive.
std::vector<MeasurementBranch> measure_slot(const StateVector& state, Slot slot);

// Reduced density matrix on the kept slots (register order).
DensityMatrix partial_trace(const StateVector& state, const std::vector<Slot>& keep);

// |<a|b>|^2; invariant under global phases of either argument.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace pathswap
