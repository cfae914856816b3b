#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "qcrb/rng.hpp"

namespace qcrb {

enum class RiskKind { euclidean, bures, weighted };
std::string to_string(RiskKind k);
RiskKind parse_risk_kind(const std::string& s);

struct SimReport {
    double risk_estimate = 0.0;  // per-trial mean risk
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    double prediction = 0.0;
    std::string prediction_source;
    std::optional<double> exact_mean;
    std::uint64_t n = 0;
    RiskKind risk_kind = RiskKind::euclidean;

    // (estimate - prediction) / std_error
    double z_score() const;
};

struct MomentSummary {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t count = 0;
};

// Threads used by run_trials; QCRB_THREADS overrides the hardware default.
unsigned default_thread_count();

// Runs trial(rng, index) for index in [0, trials) with per-trial streams; fixed chunking and a
// pairwise merge make the summary independent of thread count and scheduling.
MomentSummary run_trials(std::uint64_t trials, std::uint64_t seed,
                         const std::function<double(StreamRng&, std::uint64_t)>& trial,
                         unsigned threads = 0);

}  // namespace qcrb
