#pragma once

#include <array>
#include <set>

#include "hbsa/detection.hpp"
#include "hbsa/state.hpp"

namespace hbsa {

// The four worked analyzer inputs, in the order they are introduced:
//   0: (phi+ s, phi+ p)   1: (psi+ s, psi- p)
//   2: (phi- s, psi+ p)   3: (psi- s, phi- p)
std::array<HyperBellIndex, 4> worked_examples();

// Returns the index of a worked example, or -1.
int worked_example_of(const HyperBellIndex& idx);

// Expected intermediate states of the analyzer for worked example k.
// stage 1: after HWP -> FBS -> FS   (both frequencies erased to w2)
// stage 2: after the PBS + HWP block
// stage 3: after the 50:50 beam splitters
TwoPhotonState expected_stage1(int k);
TwoPhotonState expected_stage2(int k);
TwoPhotonState expected_stage3(int k);

// Expected final-stage detection signature of worked example k: the event
// sets obtained by reading the published final-state expressions term by
// term (ports, polarizations and interval class).
std::set<DetectionEvent> expected_stage4_events(int k);
IntervalClass expected_stage4_interval(int k);

}  // namespace hbsa
