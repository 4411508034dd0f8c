#include "hbsa/circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hbsa {

namespace {

std::string step_name(const StepSpec& s) {
    std::ostringstream os;
    switch (s.kind) {
        case StepSpec::Kind::hwp:
            os << "hwp(" << s.angle_deg << ")";
            break;
        case StepSpec::Kind::fbs:
            os << "fbs";
            break;
        case StepSpec::Kind::fs:
            os << "fs";
            if (s.fs_arm) os << "@" << to_string(*s.fs_arm);
            break;
        case StepSpec::Kind::stage2:
            os << "stage2";
            break;
        case StepSpec::Kind::bs:
            os << "bs";
            break;
        case StepSpec::Kind::ui:
            os << "ui(" << to_string(s.ui_m) << "," << to_string(s.ui_n) << ")";
            if (s.ui_sign < 0) os << "-";
            break;
        case StepSpec::Kind::delay:
            os << (s.delay_kind == DelayKind::t0 ? "delay(t0)" : "delay(t1)");
            break;
    }
    os << " on " << to_string(s.slot);
    return os.str();
}

}  // namespace

Step make_step(const StepSpec& spec, const NoiseParams& noise) {
    SinglePhotonMap map;
    switch (spec.kind) {
        case StepSpec::Kind::hwp:
            map = hwp(spec.angle_deg + noise.hwp_jitter_deg);
            break;
        case StepSpec::Kind::fbs:
            map = fbs();
            break;
        case StepSpec::Kind::fs:
            map = spec.fs_arm ? fs_on_path_perturbed(*spec.fs_arm, noise.fs_leakage)
                              : fs_perturbed(noise.fs_leakage);
            break;
        case StepSpec::Kind::stage2:
            map = stage2_map(22.5 + noise.hwp_jitter_deg);
            break;
        case StepSpec::Kind::bs:
            map = bs(noise.bs_imbalance);
            break;
        case StepSpec::Kind::ui:
            map = ui(spec.ui_m, spec.ui_n, spec.ui_sign, spec.ui_variant);
            break;
        case StepSpec::Kind::delay:
            map = delay_line(spec.delay_kind);
            break;
    }
    return Step{spec, step_name(spec), TwoPhotonOperator{std::move(map), spec.slot}};
}

Circuit build_hbsa_circuit(const NoiseParams& noise, const UiWiring& wiring) {
    if (noise.fs_leakage < 0.0 || noise.fs_leakage > 1.0)
        throw std::invalid_argument("NoiseParams: fs_leakage outside [0,1]");
    if (!(std::abs(noise.bs_imbalance) < 0.5))
        throw std::invalid_argument("NoiseParams: |bs_imbalance| must be < 1/2");
    Circuit c;
    c.name = "hbsa";
    auto add = [&](StepSpec s) { c.steps.push_back(make_step(s, noise)); };

    StepSpec s;
    s.kind = StepSpec::Kind::hwp;
    s.angle_deg = 22.5;
    add(s);
    s = StepSpec{};
    s.kind = StepSpec::Kind::fbs;
    add(s);
    s = StepSpec{};
    s.kind = StepSpec::Kind::fs;
    s.fs_arm = XTag::x1;
    add(s);
    s = StepSpec{};
    s.kind = StepSpec::Kind::stage2;
    add(s);
    s = StepSpec{};
    s.kind = StepSpec::Kind::bs;
    add(s);
    s = StepSpec{};
    s.kind = StepSpec::Kind::ui;
    s.ui_m = wiring.m1;
    s.ui_n = wiring.n1;
    s.ui_sign = wiring.sign1;
    add(s);
    s = StepSpec{};
    s.kind = StepSpec::Kind::ui;
    s.ui_m = wiring.m2;
    s.ui_n = wiring.n2;
    s.ui_sign = wiring.sign2;
    add(s);

    c.stage_marks = {2, 3, 4, 6};
    return c;
}

TwoPhotonState run(const Circuit& circuit, const TwoPhotonState& input) {
    TwoPhotonState st = input;
    for (const auto& step : circuit.steps) {
        try {
            st = apply(step.op, st);
        } catch (const DomainError& e) {
            throw std::runtime_error("step '" + step.name + "': " + e.what());
        }
    }
    return st;
}

std::vector<std::pair<std::string, TwoPhotonState>> stage_states(const Circuit& circuit,
                                                                 const TwoPhotonState& input) {
    std::vector<std::pair<std::string, TwoPhotonState>> out;
    TwoPhotonState st = input;
    for (const auto& step : circuit.steps) {
        try {
            st = apply(step.op, st);
        } catch (const DomainError& e) {
            throw std::runtime_error("step '" + step.name + "': " + e.what());
        }
        out.emplace_back(step.name, st);
    }
    return out;
}

}  // namespace hbsa
