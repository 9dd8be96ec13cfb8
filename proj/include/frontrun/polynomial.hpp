#pragma once

#include <vector>

namespace frontrun {

// Dense univariate real polynomial, highest-degree coefficient first.
class Polynomial {
public:
    explicit Polynomial(std::vector<double> coeffs_high_first);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<double>& coeffs() const noexcept { return c_; }

    [[nodiscard]] double operator()(double x) const noexcept;

    // Horner value together with a forward rounding-error bound at x; a
    // computed |value| below the bound cannot be sign-trusted.
    struct Evaluation {
        double value{};
        double error_bound{};
    };
    [[nodiscard]] Evaluation evaluate(double x) const noexcept;

    // Compensated Horner (error-free transformations): roughly twice the
    // working precision. Discriminates between neighboring doubles around a
    // root where the plain evaluation underflows into noise.
    [[nodiscard]] double evaluate_compensated(double x) const noexcept;

    [[nodiscard]] Polynomial derivative() const;

    [[nodiscard]] double coeff_abs_sum() const noexcept;

    // Leading coefficients with |c| < tiny removed (exact zeros included).
    [[nodiscard]] Polynomial trimmed(double tiny = 1e-300) const;

    // Scaled by 1/max|c|; same roots, conditioned coefficients.
    [[nodiscard]] Polynomial normalized() const;

private:
    std::vector<double> c_;
};

// Every real root of p in the closed interval [lo, hi], located to absolute
// accuracy abs_tol. Roots are enumerated, not sampled: the interval is
// partitioned into monotone pieces at the derivative's roots (recursively),
// each sign-change bracket is bisected and Newton-polished, and partition
// points whose |p| falls below the evaluation noise floor are reported as
// tangency/endpoint roots. No root in [lo, hi] can be missed up to the
// floating-point noise band around multiple roots.
[[nodiscard]] std::vector<double> real_roots_in(const Polynomial& p, double lo,
                                                double hi, double abs_tol);

} // namespace frontrun
