#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hbsa/types.hpp"

namespace hbsa {

// Complex-amplitude superposition over ordered pairs of single-photon labels.
// Slot A is the first label, slot B the second. Entries below the zero
// threshold are pruned. Immutable by convention once built: all operations
// return new states.
class TwoPhotonState {
  public:
    using LabelPair = std::pair<SinglePhotonLabel, SinglePhotonLabel>;
    using Map = std::map<LabelPair, Complex>;

    TwoPhotonState() = default;

    void add(const SinglePhotonLabel& a, const SinglePhotonLabel& b, Complex amp);

    const Map& amplitudes() const { return amps_; }
    bool empty() const { return amps_.empty(); }
    std::size_t size() const { return amps_.size(); }

    double norm() const;
    double norm_squared() const;
    TwoPhotonState normalized() const;  // throws std::invalid_argument on the zero state
    TwoPhotonState pruned(double threshold = kZeroThreshold) const;
    TwoPhotonState scaled(Complex factor) const;

    Complex inner(const TwoPhotonState& other) const;  // <this|other>

    friend TwoPhotonState operator+(const TwoPhotonState& x, const TwoPhotonState& y);
    friend TwoPhotonState operator-(const TwoPhotonState& x, const TwoPhotonState& y);

  private:
    Map amps_;
};

// True iff there is a unit complex c with ||s1 - c*s2|| <= tol. The phase is
// taken from the largest-magnitude component shared by both states.
bool equal_up_to_global_phase(const TwoPhotonState& s1, const TwoPhotonState& s2,
                              double tol = kNormTolerance);

// --- constructors -----------------------------------------------------------

// Two-photon sub-space parts, used by make_custom. Each part is a list of
// (valueA, valueB, amplitude) rows over one degree of freedom.
struct SpatialPart {
    std::vector<std::tuple<Arm, Arm, Complex>> terms;
};
struct PolPart {
    std::vector<std::tuple<Pol, Pol, Complex>> terms;
};
struct FreqPart {
    std::vector<std::tuple<Freq, Freq, Complex>> terms;
};

SpatialPart bell_spatial(BellKind kind);
PolPart bell_pol(BellKind kind);
FreqPart psi_plus_freq();                       // (|w1 w2> + |w2 w1>)/sqrt(2)
FreqPart product_freq(Freq a, Freq b);          // |a b>

// Tensor product of the three parts, normalized. All xtag unset, delays zero.
TwoPhotonState make_custom(const SpatialPart& spatial, const PolPart& pol, const FreqPart& freq);

// Indexed hyper-Bell state with the fixed auxiliary |psi_f^+>.
TwoPhotonState make_hyper_bell(const HyperBellIndex& idx);

}  // namespace hbsa
