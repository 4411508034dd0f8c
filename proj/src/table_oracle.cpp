#include <array>
#include <cstring>
#include <stdexcept>

#include "hbsa/detection.hpp"

namespace hbsa {

namespace {

// Polarization expansion of one published signature entry:
//   same : X^{H(V)} Y^{H(V)}  -> (H,H) and (V,V)
//   opp  : X^{H(V)} Y^{V(H)}  -> (H,V) and (V,H)
//   all  : both notations listed for the pair -> all four combinations
enum class PolMode { same, opp, all };

struct Entry {
    const char* p1;
    const char* p2;
    PolMode mode;
};

struct RowSpec {
    BellKind spatial;
    BellKind pol;
    IntervalClass interval;
    std::vector<Entry> entries;
};

DetectorId det(const char* port, Pol pol) {
    DetectorId d;
    bool a = (port[0] == 'a');
    bool one = (port[1] == '1');
    d.arm = a ? (one ? Arm::a1 : Arm::a2) : (one ? Arm::b1 : Arm::b2);
    d.xtag = (port[2] == '1') ? XTag::x1 : XTag::x2;
    d.pol = pol;
    return d;
}

void expand(const Entry& e, IntervalClass cls, std::set<DetectionEvent>& out) {
    auto add = [&](Pol pa, Pol pb) { out.insert(DetectionEvent(det(e.p1, pa), det(e.p2, pb), cls)); };
    switch (e.mode) {
        case PolMode::same:
            add(Pol::H, Pol::H);
            add(Pol::V, Pol::V);
            break;
        case PolMode::opp:
            add(Pol::H, Pol::V);
            add(Pol::V, Pol::H);
            break;
        case PolMode::all:
            add(Pol::H, Pol::H);
            add(Pol::V, Pol::V);
            add(Pol::H, Pol::V);
            add(Pol::V, Pol::H);
            break;
    }
}

const std::vector<RowSpec>& row_specs() {
    using BK = BellKind;
    using IC = IntervalClass;
    using PM = PolMode;
    static const std::vector<RowSpec> specs = {
        // interval 0 group
        {BK::phi_plus, BK::phi_plus, IC::zero,
         {{"a11", "b22", PM::opp}, {"a12", "b21", PM::opp}, {"b11", "a22", PM::opp},
          {"b12", "a21", PM::opp}}},
        {BK::phi_plus, BK::phi_minus, IC::zero,
         {{"a11", "b21", PM::same}, {"a12", "b22", PM::same}, {"b11", "a21", PM::same},
          {"b12", "a22", PM::same}}},
        {BK::phi_minus, BK::phi_plus, IC::zero,
         {{"a11", "a12", PM::same}, {"a21", "a22", PM::same}, {"b11", "b12", PM::same},
          {"b21", "b22", PM::same}}},
        {BK::phi_minus, BK::phi_minus, IC::zero,
         {{"a11", "a11", PM::opp}, {"a12", "a12", PM::opp}, {"a21", "a21", PM::opp},
          {"a22", "a22", PM::opp}, {"b11", "b11", PM::opp}, {"b12", "b12", PM::opp},
          {"b21", "b21", PM::opp}, {"b22", "b22", PM::opp}}},
        // interval t0 group
        {BK::psi_plus, BK::psi_plus, IC::t0,
         {{"a11", "b12", PM::same}, {"a12", "b11", PM::same}, {"a21", "b22", PM::same},
          {"a22", "b21", PM::same}, {"a11", "a22", PM::opp}, {"a12", "a21", PM::opp},
          {"b11", "b22", PM::opp}, {"b12", "b21", PM::opp}}},
        {BK::psi_plus, BK::psi_minus, IC::t0,
         {{"a11", "b11", PM::opp}, {"a12", "b12", PM::opp}, {"a21", "b21", PM::opp},
          {"a22", "b22", PM::opp}, {"a11", "a21", PM::same}, {"a12", "a22", PM::same},
          {"b11", "b21", PM::same}, {"b12", "b22", PM::same}}},
        {BK::psi_minus, BK::psi_plus, IC::t0,
         {{"a11", "a12", PM::same}, {"a21", "a22", PM::same}, {"b11", "b12", PM::same},
          {"b21", "b22", PM::same}, {"a11", "b22", PM::opp}, {"a12", "b21", PM::opp},
          {"a21", "b12", PM::opp}, {"a22", "b11", PM::opp}}},
        {BK::psi_minus, BK::psi_minus, IC::t0,
         {{"a11", "a11", PM::opp}, {"a12", "a12", PM::opp}, {"a21", "a21", PM::opp},
          {"a22", "a22", PM::opp}, {"b11", "b11", PM::opp}, {"b12", "b12", PM::opp},
          {"b21", "b21", PM::opp}, {"b22", "b22", PM::opp}, {"a11", "b21", PM::same},
          {"a12", "b22", PM::same}, {"a21", "b11", PM::same}, {"a22", "b12", PM::same}}},
        // interval t1 group
        {BK::phi_plus, BK::psi_plus, IC::t1,
         {{"a11", "a12", PM::opp}, {"a21", "a22", PM::opp}, {"b11", "b12", PM::opp},
          {"b21", "b22", PM::opp}, {"a11", "b22", PM::opp}, {"a12", "b21", PM::opp},
          {"a21", "b12", PM::opp}, {"a22", "b11", PM::opp}}},
        {BK::phi_plus, BK::psi_minus, IC::t1,
         {{"a11", "a11", PM::same}, {"a12", "a12", PM::same}, {"a21", "a21", PM::same},
          {"a22", "a22", PM::same}, {"b11", "b11", PM::same}, {"b12", "b12", PM::same},
          {"b21", "b21", PM::same}, {"b22", "b22", PM::same}, {"a11", "b21", PM::same},
          {"a12", "b22", PM::same}, {"a21", "b11", PM::same}, {"a22", "b12", PM::same}}},
        {BK::phi_minus, BK::psi_plus, IC::t1,
         {{"a11", "a12", PM::same}, {"a21", "a22", PM::same}, {"b11", "b12", PM::same},
          {"b21", "b22", PM::same}, {"a11", "b22", PM::same}, {"a12", "b21", PM::same},
          {"a21", "b12", PM::same}, {"a22", "b11", PM::same}}},
        {BK::phi_minus, BK::psi_minus, IC::t1,
         {{"a11", "a11", PM::opp}, {"a12", "a12", PM::opp}, {"a21", "a21", PM::opp},
          {"a22", "a22", PM::opp}, {"b11", "b11", PM::opp}, {"b12", "b12", PM::opp},
          {"b21", "b21", PM::opp}, {"b22", "b22", PM::opp}, {"a11", "b21", PM::opp},
          {"a12", "b22", PM::opp}, {"a21", "b11", PM::opp}, {"a22", "b12", PM::opp}}},
        // interval t1 +- t0 group
        {BK::psi_plus, BK::phi_plus, IC::t1_pm_t0,
         {{"a11", "a22", PM::all}, {"a12", "a21", PM::all}, {"b11", "b22", PM::all},
          {"b12", "b21", PM::all}, {"a11", "b12", PM::all}, {"a12", "b11", PM::all},
          {"a21", "b22", PM::all}, {"a22", "b21", PM::all}}},
        {BK::psi_plus, BK::phi_minus, IC::t1_pm_t0,
         {{"a11", "a21", PM::all}, {"a12", "a22", PM::all}, {"b11", "b21", PM::all},
          {"b12", "b22", PM::all}, {"a11", "b11", PM::all}, {"a12", "b12", PM::all},
          {"a21", "b21", PM::all}, {"a22", "b22", PM::all}}},
        {BK::psi_minus, BK::phi_plus, IC::t1_pm_t0,
         {{"a11", "a12", PM::all}, {"a21", "a22", PM::all}, {"b11", "b12", PM::all},
          {"b21", "b22", PM::all}, {"a11", "b22", PM::all}, {"a12", "b21", PM::all},
          {"a21", "b12", PM::all}, {"a22", "b11", PM::all}}},
        {BK::psi_minus, BK::phi_minus, IC::t1_pm_t0,
         {{"a11", "a11", PM::all}, {"a12", "a12", PM::all}, {"a21", "a21", PM::all},
          {"a22", "a22", PM::all}, {"b11", "b11", PM::all}, {"b12", "b12", PM::all},
          {"b21", "b21", PM::all}, {"b22", "b22", PM::all}, {"a11", "b21", PM::all},
          {"a12", "b22", PM::all}, {"a21", "b11", PM::all}, {"a22", "b12", PM::all}}},
    };
    return specs;
}

}  // namespace

EventSetTable oracle_table() {
    EventSetTable table;
    for (const auto& spec : row_specs()) {
        EventSetRow row;
        row.input = HyperBellIndex{spec.spatial, spec.pol};
        row.interval = spec.interval;
        for (const auto& e : spec.entries) expand(e, spec.interval, row.events);
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace hbsa
