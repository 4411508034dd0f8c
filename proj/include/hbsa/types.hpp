#pragma once

#include <array>
#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hbsa {

using Complex = std::complex<double>;

inline constexpr double kZeroThreshold = 1e-12;
inline constexpr double kNormTolerance = 1e-10;

// Spatial modes a1, a2 belong to photon A's input side, b1, b2 to photon B's;
// after the beam splitters both photons can occupy any of the four arms.
enum class Arm : std::uint8_t { a1 = 0, a2 = 1, b1 = 2, b2 = 3 };
enum class Pol : std::uint8_t { H = 0, V = 1 };
// Frequency-path tag created by the FBS. `unset` until an FBS has acted.
enum class XTag : std::uint8_t { unset = 0, x1 = 1, x2 = 2 };
enum class Freq : std::uint8_t { w1 = 0, w2 = 1 };

inline const char* to_string(Arm a) {
    static const char* names[] = {"a1", "a2", "b1", "b2"};
    return names[static_cast<int>(a)];
}
inline const char* to_string(Pol p) { return p == Pol::H ? "H" : "V"; }
inline const char* to_string(XTag x) {
    static const char* names[] = {"unset", "x1", "x2"};
    return names[static_cast<int>(x)];
}
inline const char* to_string(Freq f) { return f == Freq::w1 ? "w1" : "w2"; }

// Symbolic time delay: counts of applied D(t0) and D(t1). Delays carry no
// phase (constructive-interference condition); they act purely as
// distinguishability tags.
struct DelayTag {
    std::uint8_t n0 = 0;
    std::uint8_t n1 = 0;

    friend auto operator<=>(const DelayTag&, const DelayTag&) = default;
};

inline DelayTag operator+(DelayTag a, DelayTag b) {
    return DelayTag{static_cast<std::uint8_t>(a.n0 + b.n0),
                    static_cast<std::uint8_t>(a.n1 + b.n1)};
}

// One photon's full discrete state.
struct SinglePhotonLabel {
    Arm arm = Arm::a1;
    Pol pol = Pol::H;
    XTag xtag = XTag::unset;
    Freq freq = Freq::w1;
    DelayTag delay{};

    friend auto operator<=>(const SinglePhotonLabel&, const SinglePhotonLabel&) = default;

    // Packed key; delays occupy the high bits so at most 15 of each fit.
    std::uint32_t key() const {
        return static_cast<std::uint32_t>(arm) | (static_cast<std::uint32_t>(pol) << 2) |
               (static_cast<std::uint32_t>(xtag) << 3) | (static_cast<std::uint32_t>(freq) << 5) |
               (static_cast<std::uint32_t>(delay.n0) << 6) |
               (static_cast<std::uint32_t>(delay.n1) << 10);
    }

    std::string str() const {
        std::string s = "(";
        s += to_string(arm);
        s += ",";
        s += to_string(pol);
        s += ",";
        s += to_string(xtag);
        s += ",";
        s += to_string(freq);
        s += ",d" + std::to_string(delay.n0) + std::to_string(delay.n1) + ")";
        return s;
    }
};

// Bell-state labels used for both the spatial and polarization DOF.
enum class BellKind : std::uint8_t { phi_plus = 0, phi_minus = 1, psi_plus = 2, psi_minus = 3 };

inline const char* to_string(BellKind b) {
    static const char* names[] = {"phi+", "phi-", "psi+", "psi-"};
    return names[static_cast<int>(b)];
}

struct HyperBellIndex {
    BellKind spatial = BellKind::phi_plus;
    BellKind polarization = BellKind::phi_plus;

    friend auto operator<=>(const HyperBellIndex&, const HyperBellIndex&) = default;

    std::string str() const {
        return std::string(to_string(spatial)) + "s," + to_string(polarization) + "p";
    }
};

inline std::array<HyperBellIndex, 16> all_hyper_bell_indices() {
    std::array<HyperBellIndex, 16> out{};
    int i = 0;
    for (int s = 0; s < 4; ++s)
        for (int p = 0; p < 4; ++p)
            out[i++] = HyperBellIndex{static_cast<BellKind>(s), static_cast<BellKind>(p)};
    return out;
}

// Thrown when an element is applied to a label outside its declared domain.
class DomainError : public std::runtime_error {
  public:
    DomainError(const std::string& element, const SinglePhotonLabel& label, const std::string& why)
        : std::runtime_error(element + ": label " + label.str() + " " + why),
          element_(element),
          label_(label) {}

    const std::string& element() const { return element_; }
    const SinglePhotonLabel& label() const { return label_; }

  private:
    std::string element_;
    SinglePhotonLabel label_;
};

}  // namespace hbsa
