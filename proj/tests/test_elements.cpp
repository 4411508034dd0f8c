#include <doctest.h>

#include <cmath>
#include <random>

#include "hbsa/elements.hpp"
#include "hbsa/published_states.hpp"

using namespace hbsa;

namespace {

const SinglePhotonLabel kBase{Arm::a1, Pol::H, XTag::unset, Freq::w1, {}};

SinglePhotonLabel lbl(Arm a, Pol p, XTag x = XTag::unset, Freq f = Freq::w1, DelayTag d = {}) {
    return SinglePhotonLabel{a, p, x, f, d};
}

Complex coeff(const SinglePhotonMap::Column& col, const SinglePhotonLabel& want) {
    Complex c = 0.0;
    for (const auto& [l, v] : col)
        if (l == want) c += v;
    return c;
}

TwoPhotonState random_tagged_state(std::mt19937_64& rng, int terms = 8) {
    std::uniform_int_distribution<int> arm(0, 3), pol(0, 1), xt(1, 2), fq(0, 1), d(0, 1);
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

[[maybe_unused]] bool is_identity_on(const SinglePhotonMap& m, const TwoPhotonState& probe) {
    return (apply(m, Slot::Both, probe) - probe).norm() < 1e-12;
}

}  // namespace

TEST_CASE("hwp at 22.5 degrees is the polarization Hadamard") {
    auto m = hwp(22.5);
    auto col_h = m.column(kBase);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(coeff(col_h, lbl(Arm::a1, Pol::H)) - r) < 1e-12);
    CHECK(std::abs(coeff(col_h, lbl(Arm::a1, Pol::V)) - r) < 1e-12);
    auto col_v = m.column(lbl(Arm::a1, Pol::V));
    CHECK(std::abs(coeff(col_v, lbl(Arm::a1, Pol::H)) - r) < 1e-12);
    CHECK(std::abs(coeff(col_v, lbl(Arm::a1, Pol::V)) + r) < 1e-12);
}

TEST_CASE("hwp(22.5) twice is the identity on polarization") {
    std::mt19937_64 rng(11);
    auto probe = random_tagged_state(rng);
    auto once = apply(hwp(22.5), Slot::Both, probe);
    auto twice = apply(hwp(22.5), Slot::Both, once);
    CHECK((twice - probe).norm() < 1e-12);
}

TEST_CASE("hwp(0): H fixed, V negated") {
    auto m = hwp(0.0);
    CHECK(std::abs(coeff(m.column(kBase), lbl(Arm::a1, Pol::H)) - 1.0) < 1e-12);
    CHECK(std::abs(coeff(m.column(lbl(Arm::a1, Pol::V)), lbl(Arm::a1, Pol::V)) + 1.0) < 1e-12);
}

TEST_CASE("fs swaps the frequency bins and is an involution") {
    auto m = fs();
    CHECK(coeff(m.column(kBase), lbl(Arm::a1, Pol::H, XTag::unset, Freq::w2)) == Complex(1.0));
    std::mt19937_64 rng(12);
    auto probe = random_tagged_state(rng);
    CHECK((apply(m, Slot::Both, apply(m, Slot::Both, probe)) - probe).norm() < 1e-12);
    // a symmetric frequency superposition is a fixed vector
    TwoPhotonState sym;
    sym.add(lbl(Arm::a1, Pol::H, XTag::x1, Freq::w1), lbl(Arm::b1, Pol::H, XTag::x1, Freq::w1),
            1.0 / std::sqrt(2.0));
    sym.add(lbl(Arm::a1, Pol::H, XTag::x1, Freq::w2), lbl(Arm::b1, Pol::H, XTag::x1, Freq::w2),
            1.0 / std::sqrt(2.0));
    CHECK((apply(fs(), Slot::A, sym).norm() - 1.0) < 1e-12);
}

TEST_CASE("fbs routes by frequency and sets the path tag") {
    auto m = fbs();
    auto c1 = m.column(lbl(Arm::a1, Pol::H, XTag::unset, Freq::w1));
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].first == lbl(Arm::a1, Pol::H, XTag::x1, Freq::w1));
    auto c2 = m.column(lbl(Arm::a1, Pol::H, XTag::unset, Freq::w2));
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].first == lbl(Arm::a1, Pol::H, XTag::x2, Freq::w2));
    CHECK_THROWS_AS(m.column(lbl(Arm::a1, Pol::H, XTag::x1, Freq::w1)), DomainError);
}

TEST_CASE("fs on the x1 path erases the frequency distinguishability") {
    auto m = fs_on_path(XTag::x1);
    auto c = m.column(lbl(Arm::a2, Pol::V, XTag::x1, Freq::w1));
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == lbl(Arm::a2, Pol::V, XTag::x1, Freq::w2));
    auto c2 = m.column(lbl(Arm::a2, Pol::V, XTag::x2, Freq::w2));
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].first == lbl(Arm::a2, Pol::V, XTag::x2, Freq::w2));
    CHECK_THROWS_AS(m.column(lbl(Arm::a2, Pol::V, XTag::unset, Freq::w1)), DomainError);
    // applying twice on the x1 arm restores the frequency
    std::mt19937_64 rng(13);
    auto probe = random_tagged_state(rng);
    CHECK((apply(m, Slot::Both, apply(m, Slot::Both, probe)) - probe).norm() < 1e-12);
}

TEST_CASE("stage2 acts as Hadamard with a V-controlled path flip") {
    auto m = stage2_map();
    const double r = 1.0 / std::sqrt(2.0);
    auto ch = m.column(lbl(Arm::a1, Pol::H, XTag::x1, Freq::w2));
    CHECK(std::abs(coeff(ch, lbl(Arm::a1, Pol::H, XTag::x1, Freq::w2)) - r) < 1e-12);
    CHECK(std::abs(coeff(ch, lbl(Arm::a1, Pol::V, XTag::x1, Freq::w2)) - r) < 1e-12);
    auto cv = m.column(lbl(Arm::a1, Pol::V, XTag::x1, Freq::w2));
    CHECK(std::abs(coeff(cv, lbl(Arm::a1, Pol::H, XTag::x2, Freq::w2)) - r) < 1e-12);
    CHECK(std::abs(coeff(cv, lbl(Arm::a1, Pol::V, XTag::x2, Freq::w2)) + r) < 1e-12);
    CHECK_THROWS_AS(m.column(kBase), DomainError);
}

TEST_CASE("stage2 lifted to two photons maps the published stage-1 states to stage-2") {
    for (int k = 0; k < 4; ++k) {
        auto out = apply(stage2_map(), Slot::Both, expected_stage1(k));
        CHECK(equal_up_to_global_phase(out, expected_stage2(k), 1e-10));
    }
}

TEST_CASE("bs mixes same-index arms and is an involution") {
    auto m = bs();
    const double r = 1.0 / std::sqrt(2.0);
    auto c = m.column(lbl(Arm::a1, Pol::H, XTag::x1, Freq::w2));
    CHECK(std::abs(coeff(c, lbl(Arm::a1, Pol::H, XTag::x1, Freq::w2)) - r) < 1e-12);
    CHECK(std::abs(coeff(c, lbl(Arm::b1, Pol::H, XTag::x1, Freq::w2)) - r) < 1e-12);
    auto cb = m.column(lbl(Arm::b2, Pol::V, XTag::x1, Freq::w2));
    CHECK(std::abs(coeff(cb, lbl(Arm::a2, Pol::V, XTag::x1, Freq::w2)) - r) < 1e-12);
    CHECK(std::abs(coeff(cb, lbl(Arm::b2, Pol::V, XTag::x1, Freq::w2)) + r) < 1e-12);
    std::mt19937_64 rng(14);
    auto probe = random_tagged_state(rng);
    CHECK((apply(m, Slot::Both, apply(m, Slot::Both, probe)) - probe).norm() < 1e-12);
}

TEST_CASE("ui column contract") {
    const double h = 0.5;
    auto base = [](Arm a, Pol p, DelayTag d = {}) {
        return lbl(a, p, XTag::x1, Freq::w2, d);
    };
    for (auto variant : {UiVariant::ortho, UiVariant::printed}) {
        auto m = ui(Arm::a1, Arm::b2, +1, variant);
        // (H, m) -> (Hm + Vm - Hn - Vn)/2 with no delay
        auto c = m.column(base(Arm::a1, Pol::H));
        CHECK(std::abs(coeff(c, base(Arm::a1, Pol::H)) - h) < 1e-12);
        CHECK(std::abs(coeff(c, base(Arm::a1, Pol::V)) - h) < 1e-12);
        CHECK(std::abs(coeff(c, base(Arm::b2, Pol::H)) + h) < 1e-12);
        CHECK(std::abs(coeff(c, base(Arm::b2, Pol::V)) + h) < 1e-12);
        // (V, n) -> (Hm - Vm - Hn + Vn)/2 with one t0 unit
        auto cv = m.column(base(Arm::b2, Pol::V));
        DelayTag t0{1, 0};
        CHECK(std::abs(coeff(cv, base(Arm::a1, Pol::H, t0)) - h) < 1e-12);
        CHECK(std::abs(coeff(cv, base(Arm::a1, Pol::V, t0)) + h) < 1e-12);
        CHECK(std::abs(coeff(cv, base(Arm::b2, Pol::H, t0)) + h) < 1e-12);
        CHECK(std::abs(coeff(cv, base(Arm::b2, Pol::V, t0)) - h) < 1e-12);
        // (H, n) -> all-plus with t0 + t1
        auto cn = m.column(base(Arm::b2, Pol::H));
        DelayTag t01{1, 1};
        CHECK(std::abs(coeff(cn, base(Arm::a1, Pol::H, t01)) - h) < 1e-12);
        CHECK(std::abs(coeff(cn, base(Arm::b2, Pol::V, t01)) - h) < 1e-12);
    }
    // the (V, m) column is where the two variants differ
    DelayTag t1{0, 1};
    auto printed = ui(Arm::a1, Arm::b2, +1, UiVariant::printed);
    auto cp = printed.column(base(Arm::a1, Pol::V));
    CHECK(std::abs(coeff(cp, base(Arm::a1, Pol::V, t1)) - h) < 1e-12);
    auto ortho = ui(Arm::a1, Arm::b2, +1, UiVariant::ortho);
    auto co = ortho.column(base(Arm::a1, Pol::V));
    CHECK(std::abs(coeff(co, base(Arm::a1, Pol::V, t1)) + h) < 1e-12);
    CHECK(std::abs(coeff(co, base(Arm::b2, Pol::H, t1)) - h) < 1e-12);
}

TEST_CASE("ui columns are unit length and orthogonal once delays count") {
    // the analyzer always feeds the interferometers delay-free photons; the
    // printed column layout is only an isometry there, while the
    // orthogonalized one stays an isometry for delay-carrying inputs too
    std::vector<SinglePhotonLabel> fresh;
    for (const auto& l : label_universe())
        if (l.delay == DelayTag{}) fresh.push_back(l);
    for (int sign : {+1, -1}) {
        CHECK(isometry_defect(ui(Arm::a1, Arm::b2, sign, UiVariant::printed), fresh) < 1e-12);
        CHECK(isometry_defect(ui(Arm::a1, Arm::b2, sign, UiVariant::ortho)) < 1e-12);
    }
}

TEST_CASE("ui delay-erased columns: printed variant is rank-deficient, ortho is not") {
    // With delays erased, the printed (H,m) and (V,m) columns coincide, so the
    // printed variant is an isometry only on the delay-extended space. The
    // orthogonalized variant has four mutually orthogonal patterns.
    auto erased_cols = [](UiVariant v) {
        auto m = ui(Arm::a1, Arm::b2, +1, v);
        std::vector<std::map<std::uint32_t, Complex>> cols;
        for (auto in : {std::pair{Arm::a1, Pol::H}, {Arm::a1, Pol::V}, {Arm::b2, Pol::V},
                        {Arm::b2, Pol::H}}) {
            std::map<std::uint32_t, Complex> c;
            for (const auto& [l, v2] :
                 m.column(SinglePhotonLabel{in.first, in.second, XTag::x1, Freq::w2, {}})) {
                SinglePhotonLabel stripped = l;
                stripped.delay = {};
                c[stripped.key()] += v2;
            }
            cols.push_back(std::move(c));
        }
        return cols;
    };
    auto dot = [](const auto& a, const auto& b) {
        Complex s = 0.0;
        for (const auto& [k, v] : a) {
            auto it = b.find(k);
            if (it != b.end()) s += std::conj(v) * it->second;
        }
        return s;
    };
    auto printed = erased_cols(UiVariant::printed);
    CHECK(std::abs(dot(printed[0], printed[1]) - 1.0) < 1e-12);  // identical patterns
    auto ortho = erased_cols(UiVariant::ortho);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) CHECK(std::abs(dot(ortho[i], ortho[j])) < 1e-12);
}

TEST_CASE("lift and apply") {
    std::mt19937_64 rng(15);
    auto probe = random_tagged_state(rng);
    SUBCASE("identity leaves any state unchanged") {
        CHECK((apply(identity_map(), Slot::Both, probe) - probe).norm() < 1e-14);
    }
    SUBCASE("norm preserved for every element") {
        for (const auto& m : {hwp(22.5), fs(), fs_on_path(XTag::x2), stage2_map(), bs(),
                              ui(Arm::a1, Arm::b2), ui(Arm::b1, Arm::a2, -1),
                              delay_line(DelayKind::t0)}) {
            auto out = apply(m, Slot::Both, probe);
            CHECK(std::abs(out.norm() - 1.0) < 1e-12);
        }
    }
    SUBCASE("domain errors carry the offending label") {
        TwoPhotonState bad;
        bad.add(kBase, kBase, 1.0);
        CHECK_THROWS_WITH_AS(apply(stage2_map(), Slot::A, bad),
                             doctest::Contains("(a1,H,unset,w1,d00)"), DomainError);
    }
}

TEST_CASE("element maps pass the isometry check") {
    for (const auto& m : {hwp(22.5), hwp(10.0), fs(), fs_perturbed(0.3), fs_on_path(XTag::x1),
                          fbs(), stage2_map(), stage2_map(23.0), bs(), bs(0.2),
                          ui(Arm::a1, Arm::b2), ui(Arm::b1, Arm::a2, -1),
                          delay_line(DelayKind::t1)})
        CHECK(isometry_defect(m) < 1e-12);
}
