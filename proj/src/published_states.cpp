#include "hbsa/published_states.hpp"

#include <cmath>
#include <stdexcept>

namespace hbsa {

namespace {

struct ArmTerm {
    Arm a;
    Arm b;
    double sign;
};
struct PolTerm {
    Pol a;
    Pol b;
    double sign;
};
struct XTerm {
    XTag a;
    XTag b;
};

TwoPhotonState assemble(const std::vector<ArmTerm>& arms, const std::vector<PolTerm>& pols,
                        const std::vector<XTerm>& xtags) {
    TwoPhotonState st;
    for (const auto& at : arms)
        for (const auto& pt : pols)
            for (const auto& xt : xtags) {
                SinglePhotonLabel la{at.a, pt.a, xt.a, Freq::w2, {}};
                SinglePhotonLabel lb{at.b, pt.b, xt.b, Freq::w2, {}};
                st.add(la, lb, at.sign * pt.sign);
            }
    return st.normalized();
}

const std::vector<XTerm> kXCross = {{XTag::x1, XTag::x2}, {XTag::x2, XTag::x1}};
const std::vector<XTerm> kXSame = {{XTag::x1, XTag::x1}, {XTag::x2, XTag::x2}};

std::vector<ArmTerm> bell_arms(BellKind kind) {
    double s = (kind == BellKind::phi_plus || kind == BellKind::psi_plus) ? 1.0 : -1.0;
    if (kind == BellKind::phi_plus || kind == BellKind::phi_minus)
        return {{Arm::a1, Arm::b1, 1.0}, {Arm::a2, Arm::b2, s}};
    return {{Arm::a1, Arm::b2, 1.0}, {Arm::a2, Arm::b1, s}};
}

// Polarization factors of the published stage-1 states for the four worked
// examples: (HH+VV), (-HV+VH), (HH-VV), (HV+VH).
std::vector<PolTerm> stage1_pol(int k) {
    switch (k) {
        case 0: return {{Pol::H, Pol::H, 1.0}, {Pol::V, Pol::V, 1.0}};
        case 1: return {{Pol::H, Pol::V, -1.0}, {Pol::V, Pol::H, 1.0}};
        case 2: return {{Pol::H, Pol::H, 1.0}, {Pol::V, Pol::V, -1.0}};
        case 3: return {{Pol::H, Pol::V, 1.0}, {Pol::V, Pol::H, 1.0}};
    }
    throw std::out_of_range("worked example index");
}

// Stage-2 polarization factors: (HH+VV), (-HV+VH), (HV+VH), (HH-VV).
std::vector<PolTerm> stage2_pol(int k) {
    switch (k) {
        case 0: return {{Pol::H, Pol::H, 1.0}, {Pol::V, Pol::V, 1.0}};
        case 1: return {{Pol::H, Pol::V, -1.0}, {Pol::V, Pol::H, 1.0}};
        case 2: return {{Pol::H, Pol::V, 1.0}, {Pol::V, Pol::H, 1.0}};
        case 3: return {{Pol::H, Pol::H, 1.0}, {Pol::V, Pol::V, -1.0}};
    }
    throw std::out_of_range("worked example index");
}

// Beam-splitter image of the spatial Bell states (the published eight-term
// arm structure of the stage-3 states).
std::vector<ArmTerm> stage3_arms(int k) {
    auto phi_like = [](double s2) {
        return std::vector<ArmTerm>{{Arm::a1, Arm::a1, 1.0},  {Arm::a1, Arm::b1, -1.0},
                                    {Arm::b1, Arm::a1, 1.0},  {Arm::b1, Arm::b1, -1.0},
                                    {Arm::a2, Arm::a2, s2},   {Arm::a2, Arm::b2, -s2},
                                    {Arm::b2, Arm::a2, s2},   {Arm::b2, Arm::b2, -s2}};
    };
    auto psi_like = [](double s2) {
        return std::vector<ArmTerm>{{Arm::a1, Arm::a2, 1.0},  {Arm::a1, Arm::b2, -1.0},
                                    {Arm::b1, Arm::a2, 1.0},  {Arm::b1, Arm::b2, -1.0},
                                    {Arm::a2, Arm::a1, s2},   {Arm::a2, Arm::b1, -s2},
                                    {Arm::b2, Arm::a1, s2},   {Arm::b2, Arm::b1, -s2}};
    };
    switch (k) {
        case 0: return phi_like(1.0);
        case 1: return psi_like(1.0);
        case 2: return phi_like(-1.0);
        case 3: return psi_like(-1.0);
    }
    throw std::out_of_range("worked example index");
}

// pol-pair modes for the stage-4 signature expansion
enum class PolMode { same, opp, all };

void expand_events(Arm a, Arm b, PolMode mode, const std::vector<XTerm>& xtags, IntervalClass cls,
                   std::set<DetectionEvent>& out) {
    auto add = [&](Pol pa, Pol pb, XTag xa, XTag xb) {
        DetectorId d1{a, xa, pa};
        DetectorId d2{b, xb, pb};
        out.insert(DetectionEvent(d1, d2, cls));
    };
    for (const auto& xt : xtags) {
        if (mode == PolMode::same || mode == PolMode::all) {
            add(Pol::H, Pol::H, xt.a, xt.b);
            add(Pol::V, Pol::V, xt.a, xt.b);
        }
        if (mode == PolMode::opp || mode == PolMode::all) {
            add(Pol::H, Pol::V, xt.a, xt.b);
            add(Pol::V, Pol::H, xt.a, xt.b);
        }
    }
}

}  // namespace

std::array<HyperBellIndex, 4> worked_examples() {
    return {HyperBellIndex{BellKind::phi_plus, BellKind::phi_plus},
            HyperBellIndex{BellKind::psi_plus, BellKind::psi_minus},
            HyperBellIndex{BellKind::phi_minus, BellKind::psi_plus},
            HyperBellIndex{BellKind::psi_minus, BellKind::phi_minus}};
}

int worked_example_of(const HyperBellIndex& idx) {
    auto ws = worked_examples();
    for (int k = 0; k < 4; ++k)
        if (ws[k] == idx) return k;
    return -1;
}

TwoPhotonState expected_stage1(int k) {
    auto idx = worked_examples().at(k);
    return assemble(bell_arms(idx.spatial), stage1_pol(k), kXCross);
}

TwoPhotonState expected_stage2(int k) {
    auto idx = worked_examples().at(k);
    bool cross = (k == 0 || k == 2);  // correlated xtag factor flips for the anti-correlated pols
    return assemble(bell_arms(idx.spatial), stage2_pol(k), cross ? kXCross : kXSame);
}

TwoPhotonState expected_stage3(int k) {
    bool cross = (k == 0 || k == 2);
    return assemble(stage3_arms(k), stage2_pol(k), cross ? kXCross : kXSame);
}

IntervalClass expected_stage4_interval(int k) {
    switch (k) {
        case 0: return IntervalClass::zero;
        case 1: return IntervalClass::t0;
        case 2: return IntervalClass::t1;
        case 3: return IntervalClass::t1_pm_t0;
    }
    throw std::out_of_range("worked example index");
}

std::set<DetectionEvent> expected_stage4_events(int k) {
    std::set<DetectionEvent> out;
    IntervalClass cls = expected_stage4_interval(k);
    switch (k) {
        case 0:
            // (b1 a2 + a2 b1 - a1 b2 - b2 a1) x (HV + VH), cross-path tags
            for (auto [a, b] : {std::pair{Arm::b1, Arm::a2}, {Arm::a1, Arm::b2}})
                expand_events(a, b, PolMode::opp, kXCross, cls, out);
            break;
        case 1:
            // (a1 a2 + b1 b2 types) x (HH - VV)  and (a1 b1 types) x (HV - VH)
            for (auto [a, b] : {std::pair{Arm::a1, Arm::a2}, {Arm::b2, Arm::b1}})
                expand_events(a, b, PolMode::same, kXSame, cls, out);
            for (auto [a, b] : {std::pair{Arm::a1, Arm::b1}, {Arm::b2, Arm::a2}})
                expand_events(a, b, PolMode::opp, kXSame, cls, out);
            break;
        case 2:
            // (a1 a1, b2 b2, a1 b2, b2 a1, b1 b1, b1 a2, a2 b1, a2 a2) x (HH - VV)
            for (auto [a, b] : {std::pair{Arm::a1, Arm::a1}, {Arm::b2, Arm::b2},
                                {Arm::a1, Arm::b2}, {Arm::b1, Arm::b1}, {Arm::b1, Arm::a2},
                                {Arm::a2, Arm::a2}})
                expand_events(a, b, PolMode::same, kXCross, cls, out);
            break;
        case 3:
            // same arm structure, all four polarization combinations
            for (auto [a, b] : {std::pair{Arm::a1, Arm::a1}, {Arm::b2, Arm::b2},
                                {Arm::a1, Arm::b2}, {Arm::b1, Arm::b1}, {Arm::b1, Arm::a2},
                                {Arm::a2, Arm::a2}})
                expand_events(a, b, PolMode::all, kXSame, cls, out);
            break;
        default:
            throw std::out_of_range("worked example index");
    }
    return out;
}

}  // namespace hbsa
