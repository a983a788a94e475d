#pragma once
// protocol.hpp
// The staged entanglement-swap choreography: a deterministic pipeline from
// the initial product state through BS1, the spin flipper, the two CNOTs,
// BS2 and the Stern-Gerlach rotation; branch enumeration over the (path,
// spin) measurement outcomes; the measurement-dependent corrections on
// qubit 3; party bookkeeping; seeded sampling; and a verifier for the swap
// claim. run_protocol is a pure function of its config.

#include <array>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "pathswap/analysis.hpp"
#include "pathswap/gates.hpp"
#include "pathswap/svcore.hpp"

namespace pathswap {

enum class Party { Alice, Bob, Charlie };
std::string_view party_name(Party p);

enum class CorrectionMode {
    Table,         // measurement-dependent S / Z.S on qubit 3
    OmitPhaseGate, // negative control: drop the S factor, keep sigma_z
};

struct ProtocolConfig {
    BeamSplitterParams bs_params =
        BeamSplitterParams::from_alpha(1.0 / std::numbers::sqrt2);
    PathChannel flip_channel = PathChannel::Reflected;
    std::optional<std::uint64_t> sampling_seed;
    CorrectionMode correction_mode = CorrectionMode::Table;
};

inline constexpr std::array<std::string_view, 9> kStageOrder{
    "initial", "bs1", "spin_flip", "attach_q2", "alice_cnot",
    "attach_q3", "bob_cnot", "bs2", "sg"};

// Path labels are primed from this stage on (BS2 output channels).
inline constexpr std::string_view kFirstPrimedStage = "bs2";

struct Stage {
    std::string name;
    StateVector state;
};

struct GateEvent {
    std::string stage;
    std::string gate;
    std::vector<Slot> targets;
    Party party = Party::Alice;
};

struct ClassicalMessage {
    Party sender = Party::Alice;
    Party receiver = Party::Bob;
    std::string payload;
};

struct StageHoldings {
    std::string stage;
    std::map<Party, std::vector<Slot>> holdings;
};

// Who holds which slot at each stage, plus the classical messages sent.
struct PartyLedger {
    std::vector<StageHoldings> holdings;
    std::vector<ClassicalMessage> messages;
};

// One of the four (path, spin) measurement results.
struct BranchOutcome {
    int path_outcome = 0;  // kChannelT / kChannelR, primed channels
    int spin_outcome = 0;
    double probability = 0.0;
    std::optional<StateVector> pre_correction_state;  // over (q2, q3)
    std::string correction_name;
};

struct BranchMeasures {
    double fidelity_to_reference = 0.0;
    double concurrence = 0.0;
    double entropy_bits = 0.0;
};

struct ProtocolTranscript {
    ProtocolConfig config;
    bool product_state_run = false;  // boundary alpha: no entanglement created
    std::vector<Stage> stages;       // in kStageOrder
    std::vector<GateEvent> gate_events;
    std::array<BranchOutcome, 4> branches;  // (T',0), (T',1), (R',0), (R',1)
    std::array<std::optional<StateVector>, 4> final_states;  // post-correction
    std::array<BranchMeasures, 4> measures;
    PartyLedger ledger;

    const StateVector& stage_state(std::string_view name) const;
};

// a|00> + i b|11> over (q2, q3): the state every corrected branch reaches.
// (a, b) = (alpha, beta) with the flipper in the reflected channel, swapped
// otherwise.
StateVector swapped_reference_state(const ProtocolConfig& config);

ProtocolTranscript run_protocol(const ProtocolConfig& config);

// Measures path then spin on the post-sg state; returns all four outcome
// pairs in the fixed order (T',0), (T',1), (R',0), (R',1).
std::array<BranchOutcome, 4> enumerate_branches(const StateVector& post_sg_state);

struct Correction {
    std::string name;
    GateMatrix q3_gate;  // the qubit-2 factor is always the identity
};

Correction correction_for(int path_outcome, int spin_outcome,
                          CorrectionMode mode = CorrectionMode::Table);

// Applies the outcome's correction to the branch state; throws on an absent
// (zero-probability) branch.
StateVector apply_correction(const BranchOutcome& branch,
                             CorrectionMode mode = CorrectionMode::Table);

// Structural audit of the transcript's gate events against the ledger.
struct LocalityAudit {
    bool joint_q2_q3_free = true;      // no gate targets q2 and q3 together
    bool single_party_targets = true;  // every gate stays within one party
    bool q2_idle_after_alice_cnot = true;
    std::string detail;  // first violations, if any

    bool passed() const {
        return joint_q2_q3_free && single_party_targets && q2_idle_after_alice_cnot;
    }
};
LocalityAudit audit_locality(const ProtocolTranscript& transcript);

inline constexpr std::uint64_t kDefaultSampleSeed = 997;

// Seeded sampling of the branch distribution; identical seed, identical counts.
struct SampleResult {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    bool seed_was_default = false;
    std::array<std::uint64_t, 4> counts{};  // branch order as above
};
SampleResult sample_run(const ProtocolConfig& config, std::uint64_t shots);

double chi_square_against_uniform(const std::array<std::uint64_t, 4>& counts);

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    bool passed = false;
    std::vector<VerificationCheck> checks;
};

// Asserts, at tolerance tol: every corrected branch reaches the reference
// state; branch concurrences equal 2 alpha beta; the locality structure
// holds; the intermediate stages match their closed-form states; and the
// input path-spin concurrence is conserved in the output.
VerificationReport verify_transcript(const ProtocolTranscript& transcript,
                                     double tol = kTol);
VerificationReport verify_swap(const ProtocolConfig& config, double tol = kTol);

}  // namespace pathswap
