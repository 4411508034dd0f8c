#include "hbsa/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hbsa {

void TwoPhotonState::add(const SinglePhotonLabel& a, const SinglePhotonLabel& b, Complex amp) {
    auto key = LabelPair{a, b};
    auto it = amps_.find(key);
    if (it == amps_.end()) {
        if (std::abs(amp) > 0.0) amps_.emplace(key, amp);
        return;
    }
    it->second += amp;
    if (std::abs(it->second) < kZeroThreshold) amps_.erase(it);
}

double TwoPhotonState::norm_squared() const {
    double s = 0.0;
    for (const auto& [k, v] : amps_) s += std::norm(v);
    return s;
}

double TwoPhotonState::norm() const { return std::sqrt(norm_squared()); }

TwoPhotonState TwoPhotonState::pruned(double threshold) const {
    TwoPhotonState out;
    for (const auto& [k, v] : amps_)
        if (std::abs(v) >= threshold) out.amps_.emplace(k, v);
    return out;
}

TwoPhotonState TwoPhotonState::scaled(Complex factor) const {
    TwoPhotonState out;
    for (const auto& [k, v] : amps_) out.amps_.emplace(k, v * factor);
    return out;
}

TwoPhotonState TwoPhotonState::normalized() const {
    double n = norm();
    if (n < kZeroThreshold)
        throw std::invalid_argument("normalize: zero state (upstream wiring bug?)");
    return scaled(1.0 / n).pruned();
}

Complex TwoPhotonState::inner(const TwoPhotonState& other) const {
    // iterate over the smaller map
    const Map& small = amps_.size() <= other.amps_.size() ? amps_ : other.amps_;
    const Map& big = amps_.size() <= other.amps_.size() ? other.amps_ : amps_;
    bool conj_small = (&small == &amps_);
    Complex s = 0.0;
    for (const auto& [k, v] : small) {
        auto it = big.find(k);
        if (it == big.end()) continue;
        s += conj_small ? std::conj(v) * it->second : std::conj(it->second) * v;
    }
    return s;
}

TwoPhotonState operator+(const TwoPhotonState& x, const TwoPhotonState& y) {
    TwoPhotonState out = x;
    for (const auto& [k, v] : y.amps_) out.add(k.first, k.second, v);
    return out.pruned();
}

TwoPhotonState operator-(const TwoPhotonState& x, const TwoPhotonState& y) {
    TwoPhotonState out = x;
    for (const auto& [k, v] : y.amps_) out.add(k.first, k.second, -v);
    return out.pruned();
}

bool equal_up_to_global_phase(const TwoPhotonState& s1, const TwoPhotonState& s2, double tol) {
    // phase from the largest-magnitude shared component
    const auto& a1 = s1.amplitudes();
    const auto& a2 = s2.amplitudes();
    double best = 0.0;
    Complex c1, c2;
    for (const auto& [k, v] : a1) {
        auto it = a2.find(k);
        if (it == a2.end()) continue;
        double m = std::min(std::abs(v), std::abs(it->second));
        if (m > best) {
            best = m;
            c1 = v;
            c2 = it->second;
        }
    }
    if (best < kZeroThreshold) return s1.empty() && s2.empty();
    Complex phase = c1 / c2;
    phase /= std::abs(phase);
    return (s1 - s2.scaled(phase)).norm() <= tol;
}

SpatialPart bell_spatial(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    const double s = (kind == BellKind::phi_plus || kind == BellKind::psi_plus) ? 1.0 : -1.0;
    if (kind == BellKind::phi_plus || kind == BellKind::phi_minus)
        return {{{Arm::a1, Arm::b1, r}, {Arm::a2, Arm::b2, s * r}}};
    return {{{Arm::a1, Arm::b2, r}, {Arm::a2, Arm::b1, s * r}}};
}

PolPart bell_pol(BellKind kind) {
    const double r = 1.0 / std::sqrt(2.0);
    const double s = (kind == BellKind::phi_plus || kind == BellKind::psi_plus) ? 1.0 : -1.0;
    if (kind == BellKind::phi_plus || kind == BellKind::phi_minus)
        return {{{Pol::H, Pol::H, r}, {Pol::V, Pol::V, s * r}}};
    return {{{Pol::H, Pol::V, r}, {Pol::V, Pol::H, s * r}}};
}

FreqPart psi_plus_freq() {
    const double r = 1.0 / std::sqrt(2.0);
    return {{{Freq::w1, Freq::w2, r}, {Freq::w2, Freq::w1, r}}};
}

FreqPart product_freq(Freq a, Freq b) { return {{{a, b, 1.0}}}; }

TwoPhotonState make_custom(const SpatialPart& spatial, const PolPart& pol, const FreqPart& freq) {
    TwoPhotonState out;
    for (const auto& [sa, sb, cs] : spatial.terms)
        for (const auto& [pa, pb, cp] : pol.terms)
            for (const auto& [fa, fb, cf] : freq.terms) {
                SinglePhotonLabel la{sa, pa, XTag::unset, fa, {}};
                SinglePhotonLabel lb{sb, pb, XTag::unset, fb, {}};
                out.add(la, lb, cs * cp * cf);
            }
    return out.normalized();
}

TwoPhotonState make_hyper_bell(const HyperBellIndex& idx) {
    return make_custom(bell_spatial(idx.spatial), bell_pol(idx.polarization), psi_plus_freq());
}

}  // namespace hbsa
