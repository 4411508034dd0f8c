#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hbsa/circuit.hpp"
#include "hbsa/state.hpp"

namespace hbsa {

// One of 16 single-photon detectors: an output port (arm + frequency-path
// tag) behind a polarizing splitter. Rendered a_ij / b_ij with i the arm
// index and j the path index, e.g. a11 = (a1, x1).
struct DetectorId {
    Arm arm = Arm::a1;
    XTag xtag = XTag::x1;
    Pol pol = Pol::H;

    friend auto operator<=>(const DetectorId&, const DetectorId&) = default;

    std::string port() const;  // "a11".."b22"
    std::string str() const;   // "a11:H"
};

enum class IntervalClass : std::uint8_t { zero = 0, t0 = 1, t1 = 2, t1_pm_t0 = 3 };

const char* to_string(IntervalClass c);

// Symbolic pair interval from two accumulated delay tags. Differences outside
// the analyzer's reachable set throw std::domain_error.
IntervalClass interval_class(const DelayTag& d1, const DelayTag& d2);

// Unordered pair of fired detectors plus the pair's interval class.
struct DetectionEvent {
    DetectorId d1;  // canonical: d1 <= d2
    DetectorId d2;
    IntervalClass interval = IntervalClass::zero;

    DetectionEvent() = default;
    DetectionEvent(DetectorId a, DetectorId b, IntervalClass c);

    friend auto operator<=>(const DetectionEvent&, const DetectionEvent&) = default;

    std::string str() const;
};

using Distribution = std::map<DetectionEvent, double>;

// Born-rule readout of a final state. Amplitudes belonging to the same
// physical detection record interfere coherently; records are labelled by the
// unordered detector pair together with the photons' relative delay (common
// delay shifts are unobservable under the constructive-interference
// condition). Throws if any label still has xtag = unset.
Distribution detection_distribution(const TwoPhotonState& state);

struct SignatureRow {
    HyperBellIndex input;
    Distribution events;

    IntervalClass interval() const;  // throws if the row mixes classes
};

class SignatureTable {
  public:
    explicit SignatureTable(std::vector<SignatureRow> rows);

    const std::vector<SignatureRow>& rows() const { return rows_; }
    const SignatureRow& row(const HyperBellIndex& idx) const;

    // True iff no (detectors, interval) pair appears in two rows.
    bool disjoint() const;

  private:
    std::vector<SignatureRow> rows_;
};

// Runs all 16 hyper-Bell inputs through the circuit. Asserts row
// normalization; errors are tagged with the offending input index.
SignatureTable signature_table(const Circuit& circuit);

// As above but with the auxiliary frequency state replaced.
SignatureTable signature_table(const Circuit& circuit, const FreqPart& aux);

class UnknownEventError : public std::runtime_error {
  public:
    explicit UnknownEventError(const DetectionEvent& ev)
        : std::runtime_error("event " + ev.str() + " is not produced by any input") {}
};

// Deterministic event -> input lookup. Construction fails if the table's
// rows are not pairwise disjoint.
class Classifier {
  public:
    explicit Classifier(const SignatureTable& table, double min_probability = kZeroThreshold);
    HyperBellIndex classify(const DetectionEvent& ev) const;  // throws UnknownEventError

  private:
    std::map<DetectionEvent, HyperBellIndex> index_;
};

inline HyperBellIndex classify(const DetectionEvent& ev, const SignatureTable& table) {
    return Classifier(table).classify(ev);
}

// --- oracle -------------------------------------------------------------------

// Event sets only, no probabilities.
struct EventSetRow {
    HyperBellIndex input;
    IntervalClass interval = IntervalClass::zero;
    std::set<DetectionEvent> events;
};

using EventSetTable = std::vector<EventSetRow>;

// The published 16-row signature table, transcribed verbatim with the H(V)
// superscript notation expanded into both polarization assignments.
EventSetTable oracle_table();

struct RowDiff {
    HyperBellIndex input;
    std::vector<DetectionEvent> missing;             // in oracle, not computed
    std::vector<DetectionEvent> extra;               // computed, not in oracle
    bool interval_mismatch = false;
    IntervalClass oracle_interval = IntervalClass::zero;

    bool empty() const { return missing.empty() && extra.empty() && !interval_mismatch; }
};

struct DiffReport {
    std::vector<RowDiff> rows;  // one per input, in index order

    bool empty() const;
    std::size_t mismatched_rows() const;
};

DiffReport diff_tables(const SignatureTable& computed, const EventSetTable& oracle);
DiffReport diff_tables(const EventSetTable& computed, const EventSetTable& oracle);

}  // namespace hbsa
