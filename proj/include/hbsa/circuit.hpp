#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hbsa/elements.hpp"
#include "hbsa/state.hpp"

namespace hbsa {

// Unitarized element imperfections. All zero reproduces every ideal element
// exactly.
struct NoiseParams {
    double hwp_jitter_deg = 0.0;  // additive offset to every 22.5deg plate
    double fs_leakage = 0.0;      // residual un-flipped amplitude, in [0,1]
    double bs_imbalance = 0.0;    // transmission amplitude sqrt(1/2 + eps), |eps| < 1/2

    bool is_zero() const {
        return hwp_jitter_deg == 0.0 && fs_leakage == 0.0 && bs_imbalance == 0.0;
    }
};

// Serializable description of one circuit step (see the circuit-description
// grammar in parser.hpp). A step is one lifted operator.
struct StepSpec {
    enum class Kind : std::uint8_t { hwp, fbs, fs, stage2, bs, ui, delay };

    Kind kind = Kind::hwp;
    Slot slot = Slot::Both;
    double angle_deg = 22.5;            // hwp
    std::optional<XTag> fs_arm;         // fs: restrict to one FBS output path
    Arm ui_m = Arm::a1;                 // ui
    Arm ui_n = Arm::b2;
    int ui_sign = +1;
    UiVariant ui_variant = UiVariant::ortho;
    DelayKind delay_kind = DelayKind::t0;

    friend bool operator==(const StepSpec&, const StepSpec&) = default;
};

struct Step {
    StepSpec spec;
    std::string name;
    TwoPhotonOperator op;
};

struct Circuit {
    std::string name = "circuit";
    std::vector<Step> steps;
    // indices of steps after which the state corresponds to one of the four
    // analyzer stages (set by build_hbsa_circuit; empty for parsed circuits
    // unless they match the canonical layout)
    std::vector<std::size_t> stage_marks;
};

// Builds the lifted operator for a step description, applying the given
// perturbations to the affected element kinds.
Step make_step(const StepSpec& spec, const NoiseParams& noise = {});

// Which arms each unbalanced interferometer connects, and the sign convention
// of its n-arm coupling. The default pairing is the one consistent with the
// cross-index output terms of the analyzer's final stage.
struct UiWiring {
    Arm m1 = Arm::a1;
    Arm n1 = Arm::b2;
    int sign1 = +1;
    Arm m2 = Arm::b1;
    Arm n2 = Arm::a2;
    int sign2 = -1;
};

// The canonical hyper-Bell analyzer pipeline:
//   hwp(22.5) -> fbs -> fs@x1 -> stage2 -> bs -> ui(m1,n1) -> ui(m2,n2)
Circuit build_hbsa_circuit(const NoiseParams& noise = {}, const UiWiring& wiring = {});

// Sequential application of all steps. Element domain errors are rethrown
// with the offending step name attached.
TwoPhotonState run(const Circuit& circuit, const TwoPhotonState& input);

// All intermediate states in order, one per step.
std::vector<std::pair<std::string, TwoPhotonState>> stage_states(const Circuit& circuit,
                                                                 const TwoPhotonState& input);

}  // namespace hbsa
