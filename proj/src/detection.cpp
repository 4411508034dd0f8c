#include "hbsa/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace hbsa {

std::string DetectorId::port() const {
    std::string s;
    s += (arm == Arm::a1 || arm == Arm::a2) ? 'a' : 'b';
    s += (arm == Arm::a1 || arm == Arm::b1) ? '1' : '2';
    s += (xtag == XTag::x1) ? '1' : '2';
    return s;
}

std::string DetectorId::str() const { return port() + ":" + to_string(pol); }

const char* to_string(IntervalClass c) {
    static const char* names[] = {"0", "t0", "t1", "t1+-t0"};
    return names[static_cast<int>(c)];
}

IntervalClass interval_class(const DelayTag& d1, const DelayTag& d2) {
    int a = std::abs(int(d1.n0) - int(d2.n0));
    int b = std::abs(int(d1.n1) - int(d2.n1));
    if (a == 0 && b == 0) return IntervalClass::zero;
    if (a == 1 && b == 0) return IntervalClass::t0;
    if (a == 0 && b == 1) return IntervalClass::t1;
    if (a == 1 && b == 1) return IntervalClass::t1_pm_t0;
    throw std::domain_error("interval_class: delay difference (" + std::to_string(a) + "," +
                            std::to_string(b) + ") outside the supported delay set");
}

DetectionEvent::DetectionEvent(DetectorId a, DetectorId b, IntervalClass c) : interval(c) {
    if (b < a) std::swap(a, b);
    d1 = a;
    d2 = b;
}

std::string DetectionEvent::str() const {
    return "{" + d1.str() + ", " + d2.str() + "}@" + to_string(interval);
}

namespace {

// Coherence-group key for one ordered amplitude: the two detector-side mode
// labels (port, pol, freq) plus the signed relative delay, canonicalized over
// photon exchange.
struct RecordKey {
    // packed detector+freq for each side, delay difference d(A) - d(B)
    std::uint32_t ka, kb;
    int dn0, dn1;

    friend auto operator<=>(const RecordKey&, const RecordKey&) = default;
};

std::uint32_t mode_key(const SinglePhotonLabel& l) {
    return static_cast<std::uint32_t>(l.arm) | (static_cast<std::uint32_t>(l.xtag) << 2) |
           (static_cast<std::uint32_t>(l.pol) << 4) | (static_cast<std::uint32_t>(l.freq) << 5);
}

DetectorId detector_of(std::uint32_t key) {
    DetectorId d;
    d.arm = static_cast<Arm>(key & 3u);
    d.xtag = static_cast<XTag>((key >> 2) & 3u);
    d.pol = static_cast<Pol>((key >> 4) & 1u);
    return d;
}

}  // namespace

Distribution detection_distribution(const TwoPhotonState& state) {
    std::map<RecordKey, Complex> records;
    for (const auto& [pair, amp] : state.amplitudes()) {
        const auto& la = pair.first;
        const auto& lb = pair.second;
        if (la.xtag == XTag::unset || lb.xtag == XTag::unset)
            throw std::runtime_error(
                "detection_distribution: photon without frequency-path tag (no FBS upstream)");
        RecordKey fwd{mode_key(la), mode_key(lb), int(la.delay.n0) - int(lb.delay.n0),
                      int(la.delay.n1) - int(lb.delay.n1)};
        RecordKey rev{fwd.kb, fwd.ka, -fwd.dn0, -fwd.dn1};
        records[std::min(fwd, rev)] += amp;
    }
    Distribution dist;
    for (const auto& [key, amp] : records) {
        bool diagonal = (key.ka == key.kb && key.dn0 == 0 && key.dn1 == 0);
        double p = std::norm(amp) * (diagonal ? 2.0 : 1.0);
        if (p < kZeroThreshold) continue;
        IntervalClass cls =
            interval_class(DelayTag{std::uint8_t(std::abs(key.dn0)), std::uint8_t(std::abs(key.dn1))},
                           DelayTag{0, 0});
        DetectionEvent ev(detector_of(key.ka), detector_of(key.kb), cls);
        dist[ev] += p;
    }
    return dist;
}

IntervalClass SignatureRow::interval() const {
    if (events.empty()) throw std::runtime_error("empty signature row");
    IntervalClass c = events.begin()->first.interval;
    for (const auto& [ev, p] : events)
        if (ev.interval != c)
            throw std::runtime_error("signature row for " + input.str() + " mixes interval classes");
    return c;
}

SignatureTable::SignatureTable(std::vector<SignatureRow> rows) : rows_(std::move(rows)) {}

const SignatureRow& SignatureTable::row(const HyperBellIndex& idx) const {
    for (const auto& r : rows_)
        if (r.input == idx) return r;
    throw std::out_of_range("no signature row for " + idx.str());
}

bool SignatureTable::disjoint() const {
    std::set<DetectionEvent> seen;
    for (const auto& r : rows_)
        for (const auto& [ev, p] : r.events)
            if (!seen.insert(ev).second) return false;
    return true;
}

namespace {

SignatureTable build_table(const Circuit& circuit, const FreqPart* aux) {
    std::vector<SignatureRow> rows;
    for (const auto& idx : all_hyper_bell_indices()) {
        try {
            TwoPhotonState in =
                aux ? make_custom(bell_spatial(idx.spatial), bell_pol(idx.polarization), *aux)
                    : make_hyper_bell(idx);
            TwoPhotonState out = run(circuit, in);
            SignatureRow row{idx, detection_distribution(out)};
            double total = 0.0;
            for (const auto& [ev, p] : row.events) total += p;
            if (std::abs(total - 1.0) > kNormTolerance)
                throw std::runtime_error("row probabilities sum to " + std::to_string(total));
            rows.push_back(std::move(row));
        } catch (const std::exception& e) {
            throw std::runtime_error("signature_table[" + idx.str() + "]: " + e.what());
        }
    }
    return SignatureTable(std::move(rows));
}

}  // namespace

SignatureTable signature_table(const Circuit& circuit) { return build_table(circuit, nullptr); }

SignatureTable signature_table(const Circuit& circuit, const FreqPart& aux) {
    return build_table(circuit, &aux);
}

Classifier::Classifier(const SignatureTable& table, double min_probability) {
    for (const auto& r : table.rows())
        for (const auto& [ev, p] : r.events) {
            if (p < min_probability) continue;
            auto [it, inserted] = index_.emplace(ev, r.input);
            if (!inserted && it->second != r.input)
                throw std::runtime_error("signature table is not disjoint: event " + ev.str() +
                                         " appears in rows " + it->second.str() + " and " +
                                         r.input.str());
        }
}

HyperBellIndex Classifier::classify(const DetectionEvent& ev) const {
    auto it = index_.find(ev);
    if (it == index_.end()) throw UnknownEventError(ev);
    return it->second;
}

bool DiffReport::empty() const {
    return std::all_of(rows.begin(), rows.end(), [](const RowDiff& r) { return r.empty(); });
}

std::size_t DiffReport::mismatched_rows() const {
    std::size_t n = 0;
    for (const auto& r : rows)
        if (!r.empty()) ++n;
    return n;
}

namespace {

DiffReport diff_impl(const std::vector<std::pair<HyperBellIndex, std::set<DetectionEvent>>>& comp,
                     const EventSetTable& oracle) {
    DiffReport rep;
    for (const auto& orow : oracle) {
        RowDiff d;
        d.input = orow.input;
        d.oracle_interval = orow.interval;
        const std::set<DetectionEvent>* cset = nullptr;
        for (const auto& [idx, evs] : comp)
            if (idx == orow.input) cset = &evs;
        if (!cset) continue;
        for (const auto& ev : orow.events)
            if (!cset->count(ev)) d.missing.push_back(ev);
        for (const auto& ev : *cset) {
            if (!orow.events.count(ev)) d.extra.push_back(ev);
            if (ev.interval != orow.interval) d.interval_mismatch = true;
        }
        rep.rows.push_back(std::move(d));
    }
    return rep;
}

}  // namespace

DiffReport diff_tables(const SignatureTable& computed, const EventSetTable& oracle) {
    std::vector<std::pair<HyperBellIndex, std::set<DetectionEvent>>> comp;
    for (const auto& r : computed.rows()) {
        std::set<DetectionEvent> evs;
        for (const auto& [ev, p] : r.events) evs.insert(ev);
        comp.emplace_back(r.input, std::move(evs));
    }
    return diff_impl(comp, oracle);
}

DiffReport diff_tables(const EventSetTable& computed, const EventSetTable& oracle) {
    std::vector<std::pair<HyperBellIndex, std::set<DetectionEvent>>> comp;
    for (const auto& r : computed) comp.emplace_back(r.input, r.events);
    return diff_impl(comp, oracle);
}

}  // namespace hbsa
