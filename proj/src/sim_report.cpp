#include "qcrb/sim_report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "qcrb/errors.hpp"

namespace qcrb {

namespace {

constexpr std::uint64_t kChunk = 4096;

// Chan et al. merge of (count, mean, M2).
struct Moments {
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;
};

Moments merge(const Moments& a, const Moments& b) {
    if (a.count == 0.0) return b;
    if (b.count == 0.0) return a;
    Moments out;
    out.count = a.count + b.count;
    const double delta = b.mean - a.mean;
    out.mean = a.mean + delta * (b.count / out.count);
    out.m2 = a.m2 + b.m2 + delta * delta * (a.count * b.count / out.count);
    return out;
}

Moments pairwise(const std::vector<Moments>& parts, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return parts[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge(pairwise(parts, lo, mid), pairwise(parts, mid, hi));
}

}  // namespace

std::string to_string(RiskKind k) {
    switch (k) {
        case RiskKind::euclidean: return "euclidean";
        case RiskKind::bures: return "bures";
        case RiskKind::weighted: return "weighted";
    }
    return "unknown";
}

RiskKind parse_risk_kind(const std::string& s) {
    if (s == "euclidean") return RiskKind::euclidean;
    if (s == "bures") return RiskKind::bures;
    if (s == "weighted") return RiskKind::weighted;
    throw ValidationError("unknown risk kind '" + s + "'");
}

double SimReport::z_score() const {
    return std_error > 0.0 ? (risk_estimate - prediction) / std_error : 0.0;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("QCRB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

MomentSummary run_trials(std::uint64_t trials, std::uint64_t seed,
                         const std::function<double(StreamRng&, std::uint64_t)>& trial, unsigned threads) {
    if (trials == 0) throw ValidationError("trials must be at least 1");
    const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
    std::vector<Moments> parts(chunks);

    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t lo = c * kChunk, hi = std::min(trials, lo + kChunk);
        double sum = 0.0;
        std::vector<double> xs;
        xs.reserve(hi - lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            StreamRng rng(seed, i);
            xs.push_back(trial(rng, i));
            sum += xs.back();
        }
        Moments m;
        m.count = double(hi - lo);
        m.mean = sum / m.count;
        for (double x : xs) m.m2 += (x - m.mean) * (x - m.mean);
        parts[c] = m;
    };

    if (threads == 0) threads = default_thread_count();
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    if (threads <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) run_chunk(c);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < threads; ++t)
                pool.emplace_back([&, t] {
                    try {
                        for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) run_chunk(c);
                    } catch (...) {
                        errors[t] = std::current_exception();
                        next = chunks;
                    }
                });
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    const Moments total = pairwise(parts, 0, parts.size());
    MomentSummary out;
    out.count = trials;
    out.mean = total.mean;
    out.std_error = trials >= 2 ? std::sqrt(total.m2 / (total.count - 1.0) / total.count) : 0.0;
    return out;
}

}  // namespace qcrb
