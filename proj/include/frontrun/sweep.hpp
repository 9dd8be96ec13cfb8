#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontrun/equilibrium.hpp"

namespace frontrun {

// One comparative-statics axis: hold one theta fixed, sweep the other.
struct SweepSpec {
    enum class Axis { Theta1, ThetaZ };
    enum class Scale { Linear, Log };

    Axis axis{Axis::Theta1};
    double from{};
    double to{};
    int points{};
    Scale scale{Scale::Linear};
    double held{}; // the other theta's fixed value
    double sigma_v{1.0};
    double sigma_2{1.0};
};

struct SweepRow {
    double theta1{};
    double thetaz{};
    bool ok{};
    std::string error; // error code when !ok
    double beta{};
    double alpha_norm{};
    double profit_it_norm{};
    double profit_hft_norm{};
    double lambda1{};
    double mu1{};
    double mu2{};
    WelfareClass welfare{};
};

[[nodiscard]] std::vector<double> make_grid(double from, double to, int points,
                                            SweepSpec::Scale scale);

// Rows in grid order; a failing point is marked, not fatal. Grid points are
// independent and may be solved in parallel.
[[nodiscard]] std::vector<SweepRow> run_sweep(const SweepSpec& spec, int threads = 1);

// header: theta1,thetaz,beta,alpha_norm,profit_it_norm,profit_hft_norm,
//         lambda1,mu1,mu2,welfare
// baseline appends the no-HFT reference columns (both identically 1).
[[nodiscard]] std::string sweep_csv(const std::vector<SweepRow>& rows, bool baseline);

struct ClassifyGrid {
    double theta1_from{};
    double theta1_to{};
    int theta1_points{};
    double thetaz_from{};
    double thetaz_to{};
    int thetaz_points{};
};

struct ClassifyRow {
    double theta1{};
    double thetaz{};
    bool ok{};
    std::string error;
    WelfareClass welfare{};
    std::optional<double> theta_z_bar_value{}; // present when theta_1 <= critical
};

[[nodiscard]] std::vector<ClassifyRow> run_classify(const ClassifyGrid& grid, int threads = 1);

// header: theta1,thetaz,welfare,theta_z_bar (empty cell when not applicable)
[[nodiscard]] std::string classify_csv(const std::vector<ClassifyRow>& rows);

} // namespace frontrun
