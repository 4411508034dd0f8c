#include "hbsa/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hbsa {

double ConfusionMatrix::diagonal_min() const {
    double m = 1.0;
    for (int i = 0; i < 16; ++i) m = std::min(m, entries[i][i]);
    return m;
}

double ConfusionMatrix::diagonal_mean() const {
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += entries[i][i];
    return s / 16.0;
}

double ConfusionMatrix::unclassified_mass() const {
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += entries[i][16];
    return s / 16.0;
}

double ConfusionMatrix::row_sum(int i) const {
    return std::accumulate(entries.at(i).begin(), entries.at(i).end(), 0.0);
}

Circuit perturbed_circuit(const NoiseParams& p) { return build_hbsa_circuit(p); }

ConfusionMatrix confusion_matrix(const NoiseParams& p) {
    const Classifier ideal(signature_table(build_hbsa_circuit()));
    const Circuit noisy = perturbed_circuit(p);
    const auto indices = all_hyper_bell_indices();

    ConfusionMatrix cm;
    for (int i = 0; i < 16; ++i) {
        TwoPhotonState out = run(noisy, make_hyper_bell(indices[i]));
        for (const auto& [ev, prob] : detection_distribution(out)) {
            int j = 16;
            try {
                HyperBellIndex got = ideal.classify(ev);
                j = static_cast<int>(got.spatial) * 4 + static_cast<int>(got.polarization);
            } catch (const UnknownEventError&) {
                j = 16;
            }
            cm.entries[i][j] += prob;
        }
    }
    return cm;
}

int group_count(const FreqPart& aux) {
    SignatureTable table = signature_table(build_hbsa_circuit(), aux);
    const auto& rows = table.rows();
    const int n = static_cast<int>(rows.size());

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto overlap = [&](int i, int j) {
        for (const auto& [ev, p] : rows[i].events)
            if (rows[j].events.count(ev)) return true;
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (overlap(i, j)) {
                int ri = find(i), rj = find(j);
                if (ri != rj) parent[ri] = rj;
            }
    std::vector<int> roots;
    for (int i = 0; i < n; ++i) roots.push_back(find(i));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return static_cast<int>(roots.size());
}

int group_count() { return group_count(psi_plus_freq()); }

std::map<DetectionEvent, std::uint64_t> sample_events(const TwoPhotonState& state,
                                                      std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("sample_events: shots must be >= 1");
    Distribution dist = detection_distribution(state);
    std::vector<DetectionEvent> events;
    std::vector<double> weights;
    for (const auto& [ev, p] : dist) {
        events.push_back(ev);
        weights.push_back(p);
    }
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    std::map<DetectionEvent, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) counts[events[pick(rng)]]++;
    return counts;
}

std::vector<SweepPoint> sweep(SweepParam param, double from, double to, int points) {
    if (points < 1) throw std::invalid_argument("sweep: need at least one point");
    std::vector<SweepPoint> out;
    for (int k = 0; k < points; ++k) {
        double v = (points == 1) ? from : from + (to - from) * k / (points - 1);
        NoiseParams p;
        const char* name = "";
        switch (param) {
            case SweepParam::hwp_jitter:
                p.hwp_jitter_deg = v;
                name = "hwp-jitter";
                break;
            case SweepParam::fs_leakage:
                p.fs_leakage = v;
                name = "fs-leakage";
                break;
            case SweepParam::bs_imbalance:
                p.bs_imbalance = v;
                name = "bs-imbalance";
                break;
        }
        ConfusionMatrix cm = confusion_matrix(p);
        out.push_back(SweepPoint{name, v, cm.diagonal_min(), cm.diagonal_mean(),
                                 cm.unclassified_mass()});
    }
    return out;
}

}  // namespace hbsa
