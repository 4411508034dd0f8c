#include <doctest.h>

#include <cmath>
#include <random>

#include "hbsa/state.hpp"

using namespace hbsa;

namespace {

TwoPhotonState random_state(std::mt19937_64& rng, int terms = 6) {
    std::uniform_int_distribution<int> arm(0, 3), pol(0, 1), xt(0, 2), fq(0, 1), d(0, 1);
    std::normal_distribution<double> amp(0.0, 1.0);
    TwoPhotonState st;
    for (int i = 0; i < terms; ++i) {
        SinglePhotonLabel a{static_cast<Arm>(arm(rng)), static_cast<Pol>(pol(rng)),
                            static_cast<XTag>(xt(rng)), static_cast<Freq>(fq(rng)),
                            DelayTag{std::uint8_t(d(rng)), std::uint8_t(d(rng))}};
        SinglePhotonLabel b{static_cast<Arm>(arm(rng)), static_cast<Pol>(pol(rng)),
                            static_cast<XTag>(xt(rng)), static_cast<Freq>(fq(rng)),
                            DelayTag{std::uint8_t(d(rng)), std::uint8_t(d(rng))}};
        st.add(a, b, Complex(amp(rng), amp(rng)));
    }
    return st.normalized();
}

}  // namespace

TEST_CASE("make_hyper_bell: (phi+, phi+) has 8 equal terms of 1/(2 sqrt 2)") {
    auto st = make_hyper_bell({BellKind::phi_plus, BellKind::phi_plus});
    CHECK(st.size() == 8);
    const double want = 1.0 / (2.0 * std::sqrt(2.0));
    for (const auto& [pair, amp] : st.amplitudes()) {
        CHECK(std::abs(std::abs(amp) - want) < 1e-12);
        CHECK(amp.real() > 0.0);  // phi+ phi+ psi+f: all plus signs
        CHECK(pair.first.xtag == XTag::unset);
        CHECK(pair.second.delay == DelayTag{});
    }
}

TEST_CASE("make_hyper_bell: all 16 normalized, 8 terms of equal magnitude") {
    for (const auto& idx : all_hyper_bell_indices()) {
        auto st = make_hyper_bell(idx);
        CHECK(std::abs(st.norm() - 1.0) < 1e-12);
        CHECK(st.size() == 8);
        for (const auto& [pair, amp] : st.amplitudes())
            CHECK(std::abs(std::abs(amp) - 1.0 / (2.0 * std::sqrt(2.0))) < 1e-12);
    }
}

TEST_CASE("make_hyper_bell: (psi-, phi-) sign structure") {
    auto st = make_hyper_bell({BellKind::psi_minus, BellKind::phi_minus});
    for (const auto& [pair, amp] : st.amplitudes()) {
        double sign_sp = (pair.first.arm == Arm::a1) ? 1.0 : -1.0;  // a1 b2 vs a2 b1
        double sign_pol = (pair.first.pol == Pol::H) ? 1.0 : -1.0;  // HH vs VV
        CHECK(amp.real() * sign_sp * sign_pol > 0.0);
    }
}

TEST_CASE("the 16 hyper-Bell states are pairwise orthogonal") {
    auto idxs = all_hyper_bell_indices();
    for (std::size_t i = 0; i < idxs.size(); ++i)
        for (std::size_t j = i + 1; j < idxs.size(); ++j) {
            Complex ip = make_hyper_bell(idxs[i]).inner(make_hyper_bell(idxs[j]));
            CHECK(std::abs(ip) < 1e-12);
        }
}

TEST_CASE("make_custom") {
    SUBCASE("product frequency part gives 4 terms of 1/2") {
        auto st = make_custom(bell_spatial(BellKind::phi_plus), bell_pol(BellKind::phi_plus),
                              product_freq(Freq::w1, Freq::w2));
        CHECK(st.size() == 4);
        for (const auto& [k, amp] : st.amplitudes()) CHECK(std::abs(amp - 0.5) < 1e-12);
    }
    SUBCASE("psi+f auxiliary reproduces make_hyper_bell") {
        auto a = make_custom(bell_spatial(BellKind::psi_minus), bell_pol(BellKind::phi_plus),
                             psi_plus_freq());
        auto b = make_hyper_bell({BellKind::psi_minus, BellKind::phi_plus});
        CHECK((a - b).norm() < 1e-12);
    }
    SUBCASE("unnormalized parts give a normalized state on the same ray") {
        FreqPart stretched{{{Freq::w1, Freq::w2, 2.0}, {Freq::w2, Freq::w1, 2.0}}};
        auto a = make_custom(bell_spatial(BellKind::phi_plus), bell_pol(BellKind::phi_plus),
                             stretched);
        auto b = make_hyper_bell({BellKind::phi_plus, BellKind::phi_plus});
        CHECK(std::abs(a.norm() - 1.0) < 1e-12);
        CHECK(equal_up_to_global_phase(a, b));
    }
}

TEST_CASE("norm / normalize") {
    auto st = make_hyper_bell({BellKind::phi_plus, BellKind::psi_plus});
    CHECK(std::abs(st.norm() - 1.0) < 1e-12);
    auto doubled = st.scaled(2.0);
    CHECK(std::abs(doubled.norm() - 2.0) < 1e-12);
    CHECK(std::abs(doubled.normalized().norm() - 1.0) < 1e-14);
    TwoPhotonState empty;
    CHECK_THROWS_AS(empty.normalized(), std::invalid_argument);
}

TEST_CASE("equal_up_to_global_phase") {
    std::mt19937_64 rng(7);
    auto s = random_state(rng);
    SUBCASE("minus sign") { CHECK(equal_up_to_global_phase(s, s.scaled(-1.0))); }
    SUBCASE("factor i") { CHECK(equal_up_to_global_phase(s, s.scaled(Complex(0, 1)))); }
    SUBCASE("orthogonal states differ") {
        auto a = make_hyper_bell({BellKind::phi_plus, BellKind::phi_plus});
        auto b = make_hyper_bell({BellKind::psi_plus, BellKind::psi_minus});
        CHECK_FALSE(equal_up_to_global_phase(a, b));
    }
    SUBCASE("reflexive and symmetric on random states") {
        for (int i = 0; i < 25; ++i) {
            auto x = random_state(rng);
            auto y = random_state(rng);
            CHECK(equal_up_to_global_phase(x, x));
            CHECK(equal_up_to_global_phase(x, y) == equal_up_to_global_phase(y, x));
        }
    }
}
