#include "frontrun/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace frontrun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

}

Polynomial::Polynomial(std::vector<double> coeffs_high_first) : c_(std::move(coeffs_high_first)) {
    if (c_.empty()) {
        throw std::invalid_argument("Polynomial: empty coefficient list");
    }
}

double Polynomial::operator()(double x) const noexcept {
    double r = c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
        r = r * x + c_[k];
    }
    return r;
}

Polynomial::Evaluation Polynomial::evaluate(double x) const noexcept {
    // Running magnitude alongside Horner; the bound is the standard
    // (2n+1) u * sum |c_k| |x|^k envelope with a small safety factor.
    double r = c_[0];
    double mag = std::abs(c_[0]);
    const double ax = std::abs(x);
    for (std::size_t k = 1; k < c_.size(); ++k) {
        r = r * x + c_[k];
        mag = mag * ax + std::abs(c_[k]);
    }
    const double n = static_cast<double>(c_.size());
    return Evaluation{r, 4.0 * (2.0 * n + 1.0) * kEps * mag + 1e-300};
}

double Polynomial::evaluate_compensated(double x) const noexcept {
    double s = c_[0];
    double e = 0.0;
    for (std::size_t k = 1; k < c_.size(); ++k) {
        const double p = s * x;
        const double pe = std::fma(s, x, -p); // exact product error
        const double t = p + c_[k];
        const double z = t - p;
        const double se = (p - (t - z)) + (c_[k] - z); // exact sum error
        e = e * x + (pe + se);
        s = t;
    }
    return s + e;
}

Polynomial Polynomial::derivative() const {
    const int d = degree();
    if (d <= 0) {
        return Polynomial({0.0});
    }
    std::vector<double> dc(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        dc[static_cast<std::size_t>(k)] = c_[static_cast<std::size_t>(k)] * static_cast<double>(d - k);
    }
    return Polynomial(std::move(dc));
}

double Polynomial::coeff_abs_sum() const noexcept {
    double s = 0.0;
    for (double c : c_) {
        s += std::abs(c);
    }
    return s;
}

Polynomial Polynomial::trimmed(double tiny) const {
    std::size_t first = 0;
    while (first + 1 < c_.size() && std::abs(c_[first]) < tiny) {
        ++first;
    }
    return Polynomial(std::vector<double>(c_.begin() + static_cast<std::ptrdiff_t>(first), c_.end()));
}

Polynomial Polynomial::normalized() const {
    double top = 0.0;
    for (double c : c_) {
        top = std::max(top, std::abs(c));
    }
    if (top == 0.0) {
        return *this;
    }
    // scale by a power of two: exact for every coefficient, so the roots are
    // bit-identical to the unscaled polynomial's
    int exp = 0;
    (void)std::frexp(top, &exp);
    std::vector<double> out(c_);
    for (double& c : out) {
        c = std::ldexp(c, -exp);
    }
    return Polynomial(std::move(out));
}

namespace {

bool value_is_noise(const Polynomial::Evaluation& e) {
    return std::abs(e.value) <= e.error_bound;
}

// Newton polish inside [a, b], finished with a neighbor scan so exactly
// representable roots come out exact.
double polish_root(const Polynomial& p, const Polynomial& dp, double x, double a, double b) {
    for (int it = 0; it < 12; ++it) {
        const double f = p(x);
        if (f == 0.0) {
            break;
        }
        const double d = dp(x);
        if (d == 0.0) {
            break;
        }
        double next = x - f / d;
        if (!(next > a && next < b)) {
            break;
        }
        if (next == x) {
            break;
        }
        x = next;
    }
    double best = x;
    double best_abs = std::abs(p.evaluate_compensated(x));
    double lo_n = x;
    double hi_n = x;
    for (int k = 0; k < 2; ++k) {
        lo_n = std::nextafter(lo_n, -std::numeric_limits<double>::infinity());
        hi_n = std::nextafter(hi_n, std::numeric_limits<double>::infinity());
        for (double cand : {lo_n, hi_n}) {
            const double fa = std::abs(p.evaluate_compensated(cand));
            if (fa < best_abs) {
                best_abs = fa;
                best = cand;
            }
        }
    }
    return best;
}

double bisect_bracket(const Polynomial& p, const Polynomial& dp, double a, double b,
                      double fa, double abs_tol) {
    const bool neg_left = fa < 0.0;
    const double width_tol = std::max(abs_tol * 0.25, 2.0 * kEps * std::max(std::abs(a), std::abs(b)));
    while (b - a > width_tol) {
        const double mid = a + 0.5 * (b - a);
        if (mid <= a || mid >= b) {
            break;
        }
        const auto fm = p.evaluate(mid);
        if (value_is_noise(fm)) {
            // inside the noise band around the root; hand off to Newton
            a = std::max(a, mid - width_tol);
            b = std::min(b, mid + width_tol);
            break;
        }
        if ((fm.value < 0.0) == neg_left) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return polish_root(p, dp, a + 0.5 * (b - a), a, b);
}

void roots_recursive(const Polynomial& p, double lo, double hi, double abs_tol,
                     std::vector<double>& out) {
    const Polynomial q = p.trimmed();
    const int d = q.degree();
    if (d <= 0) {
        return;
    }
    if (d == 1) {
        const double r = -q.coeffs()[1] / q.coeffs()[0];
        if (r >= lo && r <= hi) {
            out.push_back(r);
        }
        return;
    }

    const Polynomial dq = q.derivative();
    std::vector<double> crit;
    roots_recursive(dq, lo, hi, abs_tol, crit);
    std::sort(crit.begin(), crit.end());

    std::vector<double> pts;
    pts.push_back(lo);
    for (double c : crit) {
        if (c - pts.back() > 4.0 * kEps * std::max(1.0, std::abs(c))) {
            pts.push_back(c);
        }
    }
    if (hi - pts.back() > 4.0 * kEps * std::max(1.0, std::abs(hi))) {
        pts.push_back(hi);
    } else {
        pts.back() = hi;
    }

    std::vector<Polynomial::Evaluation> evals;
    evals.reserve(pts.size());
    std::vector<bool> zero(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        evals.push_back(q.evaluate(pts[k]));
        zero[k] = value_is_noise(evals[k]);
        if (zero[k]) {
            out.push_back(pts[k]); // tangency or endpoint root
        }
    }
    // q is monotone between consecutive partition points, so each bracket
    // holds at most one root and a zero endpoint excludes an interior one.
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
        if (zero[k] || zero[k + 1]) {
            continue;
        }
        if ((evals[k].value < 0.0) != (evals[k + 1].value < 0.0)) {
            out.push_back(bisect_bracket(q, dq, pts[k], pts[k + 1], evals[k].value, abs_tol));
        }
    }
}

} // namespace

std::vector<double> real_roots_in(const Polynomial& p, double lo, double hi, double abs_tol) {
    if (!(lo < hi)) {
        throw std::invalid_argument("real_roots_in: need lo < hi");
    }
    const Polynomial q = p.trimmed().normalized();
    std::vector<double> roots;
    roots_recursive(q, lo, hi, abs_tol, roots);
    std::sort(roots.begin(), roots.end());
    std::vector<double> dedup;
    for (double r : roots) {
        if (dedup.empty() || r - dedup.back() > std::max(abs_tol, 8.0 * kEps * std::abs(r))) {
            dedup.push_back(r);
        }
    }
    return dedup;
}

} // namespace frontrun
