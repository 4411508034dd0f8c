#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hbsa/circuit.hpp"
#include "hbsa/detection.hpp"

namespace hbsa {

// Probability that input i is classified as j by the ideal-table classifier.
// Column 16 collects events the ideal classifier does not recognize.
struct ConfusionMatrix {
    // entries[i][j], j in [0, 16]; j == 16 is the unclassified column
    std::array<std::array<double, 17>, 16> entries{};

    double diagonal_min() const;
    double diagonal_mean() const;
    double unclassified_mass() const;
    double row_sum(int i) const;
};

// build_hbsa_circuit with every element replaced by its unitarized
// perturbation. Parameters outside their ranges throw.
Circuit perturbed_circuit(const NoiseParams& p);

ConfusionMatrix confusion_matrix(const NoiseParams& p);

// Number of equivalence classes of inputs under transitive closure of
// event-set overlap, with the auxiliary frequency state replacing |psi_f^+>.
// 16 means full discrimination.
int group_count(const FreqPart& aux_freq_state);
int group_count();  // with the canonical |psi_f^+>

// Draws detection events from the exact distribution; reproducible per seed.
std::map<DetectionEvent, std::uint64_t> sample_events(const TwoPhotonState& state,
                                                      std::uint64_t shots, std::uint64_t seed);

// One sweep data point, exported as a flat table row.
struct SweepPoint {
    std::string param_name;
    double param_value = 0.0;
    double min_diagonal = 0.0;
    double mean_diagonal = 0.0;
    double unclassified_mass = 0.0;
};

enum class SweepParam : std::uint8_t { hwp_jitter, fs_leakage, bs_imbalance };

std::vector<SweepPoint> sweep(SweepParam param, double from, double to, int points);

}  // namespace hbsa
