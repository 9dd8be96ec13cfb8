#include "frontrun/simulator.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>
#include <vector>

namespace frontrun {

namespace {

// ---- counter-based Gaussian substreams -------------------------------------
//
// Output n of the stream is splitmix64's finalizer applied to
// seed + n * gamma; distinct counters give disjoint positions of one global
// sequence, so the path -> draw mapping is stateless and thread-free.

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// uniform on (0, 1]: never 0, so log() below is safe
double uniform_01(std::uint64_t seed, std::uint64_t counter) noexcept {
    const std::uint64_t bits = mix64(seed + (counter + 1) * kGamma);
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// four standard normals for one base path (two Box-Muller pairs)
std::array<double, 4> path_normals(std::uint64_t seed, std::uint64_t base_path) noexcept {
    const std::uint64_t c = base_path * 4;
    const double u0 = uniform_01(seed, c);
    const double u1 = uniform_01(seed, c + 1);
    const double u2 = uniform_01(seed, c + 2);
    const double u3 = uniform_01(seed, c + 3);
    const double r0 = std::sqrt(-2.0 * std::log(u0));
    const double r1 = std::sqrt(-2.0 * std::log(u2));
    const double a0 = 2.0 * std::numbers::pi * u1;
    const double a1 = 2.0 * std::numbers::pi * u3;
    return {r0 * std::cos(a0), r0 * std::sin(a0), r1 * std::cos(a1), r1 * std::sin(a1)};
}

// ---- deterministic accumulation ---------------------------------------------

struct ChunkSums {
    double pit{};      // per-observation profit of the large trader
    double pit_sq{};
    double phf{};
    double phf_sq{};
    double y1y1{};
    double y1y2{};
    double y2y2{};
    double v_y1{};
    double v_y2{};
    double v_v{};

    ChunkSums& operator+=(const ChunkSums& o) noexcept {
        pit += o.pit;
        pit_sq += o.pit_sq;
        phf += o.phf;
        phf_sq += o.phf_sq;
        y1y1 += o.y1y1;
        y1y2 += o.y1y2;
        y2y2 += o.y2y2;
        v_y1 += o.v_y1;
        v_y2 += o.v_y2;
        v_v += o.v_v;
        return *this;
    }
};

constexpr std::uint64_t kChunkObs = 8192;

struct PathOutcome {
    double profit_it{};
    double profit_hft{};
    double v{};
    double y1{};
    double y2{};
};

PathOutcome play(const ModelParams& params, const LinearStrategies& strategies,
                 const PricingCoefficients& pricing, SignalStructure structure,
                 const std::array<double, 4>& g) noexcept {
    // centered draws; p_0 shifts prices and values together and cancels from
    // both profits, so the game is simulated in deviations
    const double v = params.sigma_v() * g[0];
    const double zn = params.sigma_z() * g[1];
    const double u1 = params.sigma_1() * g[2];
    const double u2 = params.sigma_2() * g[3];

    const double i = strategies.alpha * v;
    const double signal = structure == SignalStructure::OwnOrder ? i + zn : i + u2 + zn;
    const double x = strategies.beta * signal;
    const double y1 = x + u1;
    const double y2 = i + u2 - x;
    const double p1 = pricing.lambda_1 * y1;
    const double p2 = pricing.mu_1 * y1 + pricing.mu_2 * y2;
    return PathOutcome{(v - p2) * i, (p2 - p1) * x, v, y1, y2};
}

ChunkSums run_chunk(const ModelParams& params, const LinearStrategies& strategies,
                    const PricingCoefficients& pricing, SignalStructure structure,
                    const SimulationConfig& config, std::uint64_t obs_begin,
                    std::uint64_t obs_end) noexcept {
    ChunkSums s;
    for (std::uint64_t k = obs_begin; k < obs_end; ++k) {
        const std::array<double, 4> g = path_normals(config.seed, k);
        const PathOutcome base = play(params, strategies, pricing, structure, g);

        double pit = base.profit_it;
        double phf = base.profit_hft;
        if (config.antithetic) {
            const std::array<double, 4> neg = {-g[0], -g[1], -g[2], -g[3]};
            const PathOutcome mirror = play(params, strategies, pricing, structure, neg);
            pit = 0.5 * (pit + mirror.profit_it);
            phf = 0.5 * (phf + mirror.profit_hft);
        }
        s.pit += pit;
        s.pit_sq += pit * pit;
        s.phf += phf;
        s.phf_sq += phf * phf;

        // regression moments over the base member only; the mirrored path
        // contributes identical quadratic moments in the centered game
        s.y1y1 += base.y1 * base.y1;
        s.y1y2 += base.y1 * base.y2;
        s.y2y2 += base.y2 * base.y2;
        s.v_y1 += base.v * base.y1;
        s.v_y2 += base.v * base.y2;
        s.v_v += base.v * base.v;
    }
    return s;
}

ChunkSums reduce_pairwise(const std::vector<ChunkSums>& chunks, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        ChunkSums s;
        for (std::size_t k = lo; k < hi; ++k) {
            s += chunks[k];
        }
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    ChunkSums s = reduce_pairwise(chunks, lo, mid);
    s += reduce_pairwise(chunks, mid, hi);
    return s;
}

Estimate mean_estimate(double sum, double sum_sq, std::uint64_t n) noexcept {
    const double dn = static_cast<double>(n);
    const double mean = sum / dn;
    double var = (sum_sq - dn * mean * mean) / (dn - 1.0);
    var = std::max(var, 0.0);
    return Estimate{mean, std::sqrt(var / dn)};
}

void validate_config(const SimulationConfig& config, const LinearStrategies& strategies,
                     const PricingCoefficients& pricing) {
    if (config.n_paths < 10'000) {
        std::ostringstream msg;
        msg << "n_paths must be at least 10^4 for reliable standard errors, got "
            << config.n_paths;
        throw InvalidConfig(msg.str());
    }
    if (config.antithetic && config.n_paths % 2 != 0) {
        throw InvalidConfig("antithetic pairing needs an even n_paths");
    }
    if (config.threads < 1) {
        throw InvalidConfig("threads must be >= 1");
    }
    for (double value : {strategies.alpha, strategies.beta, pricing.lambda_1, pricing.mu_1,
                         pricing.mu_2}) {
        if (!std::isfinite(value)) {
            throw NonFinite("strategies and pricing must be finite");
        }
    }
}

} // namespace

SimulationResult simulate_game(const ModelParams& params, const LinearStrategies& strategies,
                               const PricingCoefficients& pricing, SignalStructure structure,
                               const SimulationConfig& config) {
    validate_config(config, strategies, pricing);

    const std::uint64_t n_obs = config.antithetic ? config.n_paths / 2 : config.n_paths;
    const std::size_t n_chunks = static_cast<std::size_t>((n_obs + kChunkObs - 1) / kChunkObs);
    std::vector<ChunkSums> chunks(n_chunks);

    auto worker = [&](std::size_t first_chunk, std::size_t stride) {
        for (std::size_t c = first_chunk; c < n_chunks; c += stride) {
            const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunkObs;
            const std::uint64_t end = std::min(begin + kChunkObs, n_obs);
            chunks[c] = run_chunk(params, strategies, pricing, structure, config, begin, end);
        }
    };

    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(config.threads), n_chunks);
    if (n_threads <= 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (std::size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back(worker, t, n_threads);
        }
        for (auto& th : pool) {
            th.join();
        }
    }

    const ChunkSums total = reduce_pairwise(chunks, 0, n_chunks);

    SimulationResult result;
    result.n_paths = config.n_paths;
    result.seed = config.seed;
    result.profit_it = mean_estimate(total.pit, total.pit_sq, n_obs);
    result.profit_hft = mean_estimate(total.phf, total.phf_sq, n_obs);
    result.moments = SampleMoments{total.y1y1, total.y1y2, total.y2y2,
                                   total.v_y1, total.v_y2, total.v_v, n_obs};

    if (total.y1y1 <= 0.0) {
        throw DegenerateRegressor("sample Var(y1) is zero; lambda_1 regression impossible "
                                  "(beta = 0 with sigma_1 = 0)");
    }
    const double dn = static_cast<double>(n_obs);

    // v on y1 through the origin; exact homoskedastic OLS standard errors
    const double lam = total.v_y1 / total.y1y1;
    const double rss1 = std::max(total.v_v - 2.0 * lam * total.v_y1 + lam * lam * total.y1y1, 0.0);
    result.lambda_1 = Estimate{lam, std::sqrt(rss1 / (dn - 1.0) / total.y1y1)};

    const double det = total.y1y1 * total.y2y2 - total.y1y2 * total.y1y2;
    if (det <= 1e-12 * total.y1y1 * total.y2y2) {
        std::ostringstream msg;
        msg << "sample Gram matrix of (y1, y2) is singular: det=" << det;
        throw DegenerateRegressor(msg.str());
    }
    const double mu1 = (total.v_y1 * total.y2y2 - total.v_y2 * total.y1y2) / det;
    const double mu2 = (total.v_y2 * total.y1y1 - total.v_y1 * total.y1y2) / det;
    const double rss2 = std::max(total.v_v - mu1 * total.v_y1 - mu2 * total.v_y2, 0.0);
    const double sigma2_hat = rss2 / (dn - 2.0);
    result.mu_1 = Estimate{mu1, std::sqrt(sigma2_hat * total.y2y2 / det)};
    result.mu_2 = Estimate{mu2, std::sqrt(sigma2_hat * total.y1y1 / det)};
    return result;
}

std::vector<ScanPoint> profit_scan(const ModelParams& params, const PricingCoefficients& pricing,
                                   SignalStructure structure, ScanAxis axis, double fixed_other,
                                   std::span<const double> grid) {
    if (grid.empty()) {
        throw InvalidConfig("profit_scan needs a nonempty grid");
    }
    if (!std::isfinite(fixed_other)) {
        throw NonFinite("fixed_other must be finite");
    }
    std::vector<ScanPoint> points;
    points.reserve(grid.size());
    for (double value : grid) {
        if (!std::isfinite(value)) {
            throw NonFinite("grid values must be finite");
        }
        LinearStrategies s{};
        double profit = 0.0;
        if (axis == ScanAxis::ItAlpha) {
            s = LinearStrategies{value, fixed_other};
            profit = it_profit_analytic(s, pricing, params);
        } else {
            s = LinearStrategies{fixed_other, value};
            profit = hft_profit_analytic(s, pricing, params, structure);
        }
        points.push_back(ScanPoint{value, profit});
    }
    return points;
}

} // namespace frontrun
