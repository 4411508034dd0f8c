#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hbsa/state.hpp"
#include "hbsa/types.hpp"

namespace hbsa {

// Sparse linear operator on single-photon labels. Labels outside the declared
// domain are left untouched (identity), so one lifted operator can act on a
// full superposition.
class SinglePhotonMap {
  public:
    using Column = std::vector<std::pair<SinglePhotonLabel, Complex>>;
    using ColumnFn = std::function<Column(const SinglePhotonLabel&)>;
    using DomainFn = std::function<bool(const SinglePhotonLabel&)>;

    SinglePhotonMap() = default;
    SinglePhotonMap(std::string name, ColumnFn column, DomainFn in_domain)
        : name_(std::move(name)), column_(std::move(column)), domain_(std::move(in_domain)) {}

    const std::string& name() const { return name_; }

    bool in_domain(const SinglePhotonLabel& l) const { return domain_ && domain_(l); }

    // Column for an in-domain label; identity column otherwise.
    Column column(const SinglePhotonLabel& l) const {
        if (!in_domain(l)) return {{l, 1.0}};
        return column_(l);
    }

  private:
    std::string name_;
    ColumnFn column_;
    DomainFn domain_;
};

enum class Slot : std::uint8_t { A, B, Both };

inline const char* to_string(Slot s) {
    return s == Slot::A ? "A" : (s == Slot::B ? "B" : "both");
}

// A single-photon map lifted to the chosen photon slot(s).
struct TwoPhotonOperator {
    SinglePhotonMap map;
    Slot slot = Slot::Both;
};

TwoPhotonState apply(const SinglePhotonMap& map, Slot slot, const TwoPhotonState& state);
inline TwoPhotonState apply(const TwoPhotonOperator& op, const TwoPhotonState& state) {
    return apply(op.map, op.slot, state);
}

// --- element constructors ----------------------------------------------------

SinglePhotonMap identity_map();

// Half-wave plate at `angle_deg` from horizontal:
//   H -> cos(2t) H + sin(2t) V,  V -> sin(2t) H - cos(2t) V.
SinglePhotonMap hwp(double angle_deg);

// Frequency shifter: unconditional w1 <-> w2 bit flip.
SinglePhotonMap fs();

// Frequency shifter placed on one FBS output path: flips freq only when the
// photon carries that xtag. Domain error on xtag = unset.
SinglePhotonMap fs_on_path(XTag path);

// Unitarized leaky FS: rotation in the {w1, w2} plane with residual
// un-flipped amplitude `leakage` in [0, 1]. leakage = 0 is the ideal flip.
SinglePhotonMap fs_perturbed(double leakage);
SinglePhotonMap fs_on_path_perturbed(XTag path, double leakage);

// Frequency beam splitter: routes the photon into path x1 (w1) or x2 (w2).
// Domain error if the xtag is already set.
SinglePhotonMap fbs();

// Net effect of PBS(1-4) + HWP(5-12): Hadamard on polarization combined with a
// controlled flip of the xtag path when the polarization was V.
//   |H,x> -> cos(2t)|H,x> + sin(2t)|V,x>
//   |V,x> -> sin(2t)|H,x~> - cos(2t)|V,x~>
// with t = 22.5 deg ideally. Domain error on xtag = unset.
SinglePhotonMap stage2_map(double hwp_angle_deg = 22.5);

// 50:50 beam splitter pair mixing a_i with b_i. `imbalance` shifts the power
// splitting: transmission amplitude sqrt(1/2 + imbalance). |imbalance| < 1/2.
SinglePhotonMap bs(double imbalance = 0.0);

// Column patterns for the unbalanced-interferometer block. `printed` follows
// the source layout where the (V,m) column repeats the (H,m) pattern; `ortho`
// replaces it with the orthogonal completion so the delay-erased map is
// unitary. The canonical analyzer uses `ortho`.
enum class UiVariant : std::uint8_t { ortho = 0, printed = 1 };

// Unbalanced interferometer on arms (m, n). Acts on polarization and arm,
// appends one symbolic delay per input column:
//   (H,m) +0, (V,m) +t1, (V,n) +t0, (H,n) +(t0+t1).
// `sign` = -1 flips the n-arm components of every column (the mirrored
// instance used on the second arm pair).
SinglePhotonMap ui(Arm m, Arm n, int sign = +1, UiVariant variant = UiVariant::ortho);

// Pure symbolic delay line: adds one unit of t0 or t1 to every label.
enum class DelayKind : std::uint8_t { t0 = 0, t1 = 1 };
SinglePhotonMap delay_line(DelayKind which);

// --- property helpers ---------------------------------------------------------

// Canonical finite label universe (delays in {0,1}^2) for property checks.
std::vector<SinglePhotonLabel> label_universe();

// Isometry check on the declared domain over the given universe: every column
// has unit norm and distinct in-domain labels map to orthogonal outputs
// (delay tags included). Returns the worst deviation found.
double isometry_defect(const SinglePhotonMap& map,
                       const std::vector<SinglePhotonLabel>& universe = label_universe());

}  // namespace hbsa
