#include "frontrun/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "frontrun/numfmt.hpp"

namespace frontrun {

std::string format_g17(double value) {
    char buf[40];
    if (!std::isfinite(value)) {
        return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
    }
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::vector<double> make_grid(double from, double to, int points, SweepSpec::Scale scale) {
    if (!std::isfinite(from) || !std::isfinite(to)) {
        throw NonFinite("grid bounds must be finite");
    }
    if (!(from < to)) {
        throw InvalidConfig("grid needs from < to");
    }
    if (points < 2) {
        throw InvalidConfig("grid needs at least 2 points");
    }
    if (scale == SweepSpec::Scale::Log && !(from > 0.0)) {
        throw InvalidConfig("log scale needs from > 0");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    if (scale == SweepSpec::Scale::Linear) {
        const double step = (to - from) / (points - 1);
        for (int k = 0; k < points; ++k) {
            grid[static_cast<std::size_t>(k)] = from + step * k;
        }
    } else {
        const double lf = std::log(from);
        const double step = (std::log(to) - lf) / (points - 1);
        for (int k = 0; k < points; ++k) {
            grid[static_cast<std::size_t>(k)] = std::exp(lf + step * k);
        }
    }
    grid.front() = from;
    grid.back() = to;
    return grid;
}

namespace {

// Static index partition; rows land in grid order regardless of scheduling.
void parallel_over(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    const std::size_t n_threads =
        std::min<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), count);
    if (n_threads <= 1) {
        for (std::size_t k = 0; k < count; ++k) {
            body(k);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (std::size_t t = 0; t < n_threads; ++t) {
        pool.emplace_back([&, t]() {
            for (std::size_t k = t; k < count; k += n_threads) {
                body(k);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads) {
    const std::vector<double> grid = make_grid(spec.from, spec.to, spec.points, spec.scale);
    if (!std::isfinite(spec.held) || spec.held < 0.0) {
        throw InvalidConfig("held theta must be finite and >= 0");
    }

    std::vector<SweepRow> rows(grid.size());
    parallel_over(grid.size(), threads, [&](std::size_t k) {
        SweepRow& row = rows[k];
        if (spec.axis == SweepSpec::Axis::Theta1) {
            row.theta1 = grid[k];
            row.thetaz = spec.held;
        } else {
            row.theta1 = spec.held;
            row.thetaz = grid[k];
        }
        try {
            const ThetaPair thetas{row.theta1, row.thetaz};
            const ModelParams params = params_from_thetas(thetas, spec.sigma_v, spec.sigma_2);
            const Equilibrium eq = solve_equilibrium(params);
            const double half = 0.5 * spec.sigma_v * spec.sigma_2;
            row.beta = eq.strategies.beta;
            row.alpha_norm = eq.strategies.alpha * spec.sigma_v / spec.sigma_2;
            row.profit_it_norm = eq.profit_it / half;
            row.profit_hft_norm = eq.profit_hft / half;
            row.lambda1 = eq.pricing.lambda_1;
            row.mu1 = eq.pricing.mu_1;
            row.mu2 = eq.pricing.mu_2;
            row.welfare = classify_welfare(thetas);
            row.ok = true;
        } catch (const Error& e) {
            row.ok = false;
            row.error = e.code();
        }
    });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, bool baseline) {
    std::ostringstream out;
    out << "theta1,thetaz,beta,alpha_norm,profit_it_norm,profit_hft_norm,lambda1,mu1,mu2,welfare";
    if (baseline) {
        out << ",baseline_alpha_norm,baseline_profit_it_norm";
    }
    out << '\n';
    for (const SweepRow& row : rows) {
        out << format_g17(row.theta1) << ',' << format_g17(row.thetaz) << ',';
        if (row.ok) {
            out << format_g17(row.beta) << ',' << format_g17(row.alpha_norm) << ','
                << format_g17(row.profit_it_norm) << ',' << format_g17(row.profit_hft_norm)
                << ',' << format_g17(row.lambda1) << ',' << format_g17(row.mu1) << ','
                << format_g17(row.mu2) << ',' << to_string(row.welfare);
        } else {
            out << "nan,nan,nan,nan,nan,nan,nan,error:" << row.error;
        }
        if (baseline) {
            out << ",1,1";
        }
        out << '\n';
    }
    return out.str();
}

std::vector<ClassifyRow> run_classify(const ClassifyGrid& grid, int threads) {
    const std::vector<double> t1 =
        make_grid(grid.theta1_from, grid.theta1_to, grid.theta1_points, SweepSpec::Scale::Linear);
    const std::vector<double> tz =
        make_grid(grid.thetaz_from, grid.thetaz_to, grid.thetaz_points, SweepSpec::Scale::Linear);

    std::vector<ClassifyRow> rows(t1.size() * tz.size());
    parallel_over(rows.size(), threads, [&](std::size_t k) {
        ClassifyRow& row = rows[k];
        row.theta1 = t1[k / tz.size()];
        row.thetaz = tz[k % tz.size()];
        try {
            row.welfare = classify_welfare(ThetaPair{row.theta1, row.thetaz});
            if (row.theta1 > 0.0 && row.theta1 <= welfare_theta1_critical()) {
                row.theta_z_bar_value = theta_z_bar(row.theta1);
            }
            row.ok = true;
        } catch (const Error& e) {
            row.ok = false;
            row.error = e.code();
        }
    });
    return rows;
}

std::string classify_csv(const std::vector<ClassifyRow>& rows) {
    std::ostringstream out;
    out << "theta1,thetaz,welfare,theta_z_bar\n";
    for (const ClassifyRow& row : rows) {
        out << format_g17(row.theta1) << ',' << format_g17(row.thetaz) << ',';
        if (row.ok) {
            out << to_string(row.welfare) << ',';
            if (row.theta_z_bar_value) {
                out << format_g17(*row.theta_z_bar_value);
            }
        } else {
            out << "error:" << row.error << ',';
        }
        out << '\n';
    }
    return out.str();
}

} // namespace frontrun
