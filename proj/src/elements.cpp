#include "hbsa/elements.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace hbsa {

namespace {

constexpr double kPi = std::numbers::pi;

SinglePhotonLabel with_pol(SinglePhotonLabel l, Pol p) {
    l.pol = p;
    return l;
}

}  // namespace

TwoPhotonState apply(const SinglePhotonMap& map, Slot slot, const TwoPhotonState& state) {
    TwoPhotonState cur = state;
    auto apply_one = [&map](const TwoPhotonState& in, bool slot_a) {
        TwoPhotonState out;
        for (const auto& [pair, amp] : in.amplitudes()) {
            const SinglePhotonLabel& src = slot_a ? pair.first : pair.second;
            for (const auto& [dst, coeff] : map.column(src)) {
                if (slot_a)
                    out.add(dst, pair.second, amp * coeff);
                else
                    out.add(pair.first, dst, amp * coeff);
            }
        }
        return out.pruned();
    };
    if (slot == Slot::A || slot == Slot::Both) cur = apply_one(cur, true);
    if (slot == Slot::B || slot == Slot::Both) cur = apply_one(cur, false);
    return cur;
}

SinglePhotonMap identity_map() {
    return SinglePhotonMap(
        "identity", [](const SinglePhotonLabel& l) { return SinglePhotonMap::Column{{l, 1.0}}; },
        [](const SinglePhotonLabel&) { return true; });
}

SinglePhotonMap hwp(double angle_deg) {
    const double t = 2.0 * angle_deg * kPi / 180.0;
    const double c = std::cos(t), s = std::sin(t);
    auto col = [c, s](const SinglePhotonLabel& l) {
        SinglePhotonMap::Column out;
        if (l.pol == Pol::H) {
            out = {{with_pol(l, Pol::H), c}, {with_pol(l, Pol::V), s}};
        } else {
            out = {{with_pol(l, Pol::H), s}, {with_pol(l, Pol::V), -c}};
        }
        return out;
    };
    return SinglePhotonMap("hwp", col, [](const SinglePhotonLabel&) { return true; });
}

SinglePhotonMap fs() {
    auto col = [](const SinglePhotonLabel& l) {
        SinglePhotonLabel o = l;
        o.freq = (l.freq == Freq::w1) ? Freq::w2 : Freq::w1;
        return SinglePhotonMap::Column{{o, 1.0}};
    };
    return SinglePhotonMap("fs", col, [](const SinglePhotonLabel&) { return true; });
}

SinglePhotonMap fs_perturbed(double leakage) {
    if (leakage < 0.0 || leakage > 1.0)
        throw std::invalid_argument("fs leakage must lie in [0, 1]");
    const double lam = leakage;
    const double flip = std::sqrt(1.0 - lam * lam);
    auto col = [lam, flip](const SinglePhotonLabel& l) {
        SinglePhotonLabel same = l;
        SinglePhotonLabel other = l;
        other.freq = (l.freq == Freq::w1) ? Freq::w2 : Freq::w1;
        SinglePhotonMap::Column out;
        if (l.freq == Freq::w1)
            out = {{same, lam}, {other, flip}};
        else
            out = {{other, flip}, {same, -lam}};
        std::erase_if(out, [](const auto& e) { return std::abs(e.second) == 0.0; });
        return out;
    };
    return SinglePhotonMap("fs~", col, [](const SinglePhotonLabel&) { return true; });
}

SinglePhotonMap fs_on_path(XTag path) { return fs_on_path_perturbed(path, 0.0); }

SinglePhotonMap fs_on_path_perturbed(XTag path, double leakage) {
    if (path == XTag::unset) throw std::invalid_argument("fs_on_path: path must be x1 or x2");
    if (leakage < 0.0 || leakage > 1.0)
        throw std::invalid_argument("fs leakage must lie in [0, 1]");
    const double lam = leakage;
    const double flip = std::sqrt(1.0 - lam * lam);
    std::string name = std::string("fs@") + to_string(path);
    auto col = [path, lam, flip, name](const SinglePhotonLabel& l) {
        if (l.xtag == XTag::unset)
            throw DomainError(name, l, "has no frequency-path tag (FBS missing upstream)");
        if (l.xtag != path) return SinglePhotonMap::Column{{l, 1.0}};
        SinglePhotonLabel same = l;
        SinglePhotonLabel other = l;
        other.freq = (l.freq == Freq::w1) ? Freq::w2 : Freq::w1;
        SinglePhotonMap::Column out;
        if (l.freq == Freq::w1)
            out = {{same, lam}, {other, flip}};
        else
            out = {{other, flip}, {same, -lam}};
        std::erase_if(out, [](const auto& e) { return std::abs(e.second) == 0.0; });
        return out;
    };
    return SinglePhotonMap(name, col, [](const SinglePhotonLabel&) { return true; });
}

SinglePhotonMap fbs() {
    auto col = [](const SinglePhotonLabel& l) {
        if (l.xtag != XTag::unset) throw DomainError("fbs", l, "already carries a path tag");
        SinglePhotonLabel o = l;
        o.xtag = (l.freq == Freq::w1) ? XTag::x1 : XTag::x2;
        return SinglePhotonMap::Column{{o, 1.0}};
    };
    return SinglePhotonMap("fbs", col, [](const SinglePhotonLabel&) { return true; });
}

SinglePhotonMap stage2_map(double hwp_angle_deg) {
    const double t = 2.0 * hwp_angle_deg * kPi / 180.0;
    const double c = std::cos(t), s = std::sin(t);
    auto col = [c, s](const SinglePhotonLabel& l) {
        if (l.xtag == XTag::unset)
            throw DomainError("stage2", l, "has no frequency-path tag (FBS missing upstream)");
        SinglePhotonMap::Column out;
        if (l.pol == Pol::H) {
            out = {{with_pol(l, Pol::H), c}, {with_pol(l, Pol::V), s}};
        } else {
            SinglePhotonLabel o = l;
            o.xtag = (l.xtag == XTag::x1) ? XTag::x2 : XTag::x1;
            out = {{with_pol(o, Pol::H), s}, {with_pol(o, Pol::V), -c}};
        }
        return out;
    };
    return SinglePhotonMap("stage2", col, [](const SinglePhotonLabel&) { return true; });
}

SinglePhotonMap bs(double imbalance) {
    if (!(std::abs(imbalance) < 0.5))
        throw std::invalid_argument("bs imbalance must satisfy |eps| < 1/2");
    const double t = std::sqrt(0.5 + imbalance);
    const double r = std::sqrt(0.5 - imbalance);
    auto col = [t, r](const SinglePhotonLabel& l) {
        SinglePhotonLabel ai = l, bi = l;
        switch (l.arm) {
            case Arm::a1:
            case Arm::b1:
                ai.arm = Arm::a1;
                bi.arm = Arm::b1;
                break;
            default:
                ai.arm = Arm::a2;
                bi.arm = Arm::b2;
                break;
        }
        bool from_a = (l.arm == Arm::a1 || l.arm == Arm::a2);
        SinglePhotonMap::Column out;
        if (from_a)
            out = {{ai, t}, {bi, r}};
        else
            out = {{ai, r}, {bi, -t}};
        return out;
    };
    return SinglePhotonMap("bs", col, [](const SinglePhotonLabel&) { return true; });
}

SinglePhotonMap ui(Arm m, Arm n, int sign, UiVariant variant) {
    if (m == n) throw std::invalid_argument("ui: m and n must differ");
    if (sign != 1 && sign != -1) throw std::invalid_argument("ui: sign must be +1 or -1");
    const double f = static_cast<double>(sign);
    std::string name = std::string("ui(") + to_string(m) + "," + to_string(n) + ")";
    auto col = [m, n, f, variant, name](const SinglePhotonLabel& l) {
        // pattern coefficients over (Hm, Vm, Hn, Vn), times 1/2
        double hm, vm, hn, vn;
        DelayTag add{};
        if (l.arm == m && l.pol == Pol::H) {
            hm = 1, vm = 1, hn = -f, vn = -f;
            add = {0, 0};
        } else if (l.arm == m && l.pol == Pol::V) {
            if (variant == UiVariant::ortho) {
                hm = 1, vm = -1, hn = f, vn = -f;
            } else {
                hm = 1, vm = 1, hn = -f, vn = -f;
            }
            add = {0, 1};
        } else if (l.arm == n && l.pol == Pol::V) {
            hm = 1, vm = -1, hn = -f, vn = f;
            add = {1, 0};
        } else {  // (H, n)
            hm = 1, vm = 1, hn = f, vn = f;
            add = {1, 1};
        }
        SinglePhotonLabel base = l;
        base.delay = l.delay + add;
        SinglePhotonLabel om_h = base, om_v = base, on_h = base, on_v = base;
        om_h.arm = m, om_h.pol = Pol::H;
        om_v.arm = m, om_v.pol = Pol::V;
        on_h.arm = n, on_h.pol = Pol::H;
        on_v.arm = n, on_v.pol = Pol::V;
        return SinglePhotonMap::Column{
            {om_h, 0.5 * hm}, {om_v, 0.5 * vm}, {on_h, 0.5 * hn}, {on_v, 0.5 * vn}};
    };
    auto dom = [m, n](const SinglePhotonLabel& l) { return l.arm == m || l.arm == n; };
    return SinglePhotonMap(name, col, dom);
}

SinglePhotonMap delay_line(DelayKind which) {
    auto col = [which](const SinglePhotonLabel& l) {
        SinglePhotonLabel o = l;
        o.delay = l.delay + (which == DelayKind::t0 ? DelayTag{1, 0} : DelayTag{0, 1});
        return SinglePhotonMap::Column{{o, 1.0}};
    };
    return SinglePhotonMap(which == DelayKind::t0 ? "delay t0" : "delay t1", col,
                           [](const SinglePhotonLabel&) { return true; });
}

std::vector<SinglePhotonLabel> label_universe() {
    std::vector<SinglePhotonLabel> out;
    for (int a = 0; a < 4; ++a)
        for (int p = 0; p < 2; ++p)
            for (int x = 0; x < 3; ++x)
                for (int fq = 0; fq < 2; ++fq)
                    for (std::uint8_t n0 = 0; n0 < 2; ++n0)
                        for (std::uint8_t n1 = 0; n1 < 2; ++n1)
                            out.push_back(SinglePhotonLabel{static_cast<Arm>(a),
                                                            static_cast<Pol>(p),
                                                            static_cast<XTag>(x),
                                                            static_cast<Freq>(fq),
                                                            DelayTag{n0, n1}});
    return out;
}

double isometry_defect(const SinglePhotonMap& map,
                       const std::vector<SinglePhotonLabel>& universe) {
    // gather in-domain columns (skip labels whose column throws: they are
    // outside the physically reachable set, e.g. unset xtag for stage2)
    std::vector<std::map<SinglePhotonLabel, Complex>> cols;
    for (const auto& l : universe) {
        if (!map.in_domain(l)) continue;
        std::map<SinglePhotonLabel, Complex> c;
        try {
            for (const auto& [dst, amp] : map.column(l)) c[dst] += amp;
        } catch (const DomainError&) {
            continue;
        }
        cols.push_back(std::move(c));
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        double n2 = 0.0;
        for (const auto& [k, v] : cols[i]) n2 += std::norm(v);
        worst = std::max(worst, std::abs(n2 - 1.0));
        for (std::size_t j = i + 1; j < cols.size(); ++j) {
            Complex dot = 0.0;
            for (const auto& [k, v] : cols[i]) {
                auto it = cols[j].find(k);
                if (it != cols[j].end()) dot += std::conj(v) * it->second;
            }
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

}  // namespace hbsa
