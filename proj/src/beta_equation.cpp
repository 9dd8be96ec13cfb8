#include "frontrun/beta_equation.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace frontrun {

namespace {

void require_theta_domain(const ThetaPair& thetas) {
    if (!std::isfinite(thetas.theta_1) || !std::isfinite(thetas.theta_z)) {
        throw NonFinite("theta_1 and theta_z must be finite");
    }
    if (thetas.theta_1 <= 0.0) {
        throw ThetaOutOfDomain("theta_1 must be > 0; the theta_1 = 0 regime has no "
                               "full equilibrium (use the partial-equilibrium operation)");
    }
    if (thetas.theta_z < 0.0) {
        throw ThetaOutOfDomain("theta_z must be >= 0");
    }
}

void require_tol(double tol) {
    if (!(tol > 0.0) || tol > 1e-6) {
        std::ostringstream msg;
        msg << "root tolerance must lie in (0, 1e-6], got " << tol;
        throw InvalidConfig(msg.str());
    }
}

} // namespace

Polynomial BetaPolynomial::as_polynomial() const {
    return Polynomial(std::vector<double>(coefficients.begin(), coefficients.end()));
}

BetaPolynomial build_beta_polynomial(const ThetaPair& thetas) {
    require_theta_domain(thetas);
    const double t = thetas.theta_1;
    const double z = thetas.theta_z;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double z2 = z * z;
    const double z3 = z2 * z;

    BetaPolynomial poly;
    poly.thetas = thetas;
    // Each coefficient is the literal sum of its monomials; for theta_z = 0
    // every monomial of the three leading coefficients is an exact 0.0, so
    // the degree collapse is structural, not thresholded.
    poly.coefficients[0] = 4.0 * t * z2 + t * z3 + 2.0 * t2 * z2 + 2.0 * z2 + z3;
    poly.coefficients[1] =
        4.0 * t * z + 4.0 * t * z2 + 2.0 * t * z3 + 8.0 * t2 * z + 4.0 * t2 * z2 + 4.0 * t3 * z;
    poly.coefficients[2] = 2.0 * t * z + t * z2 - 11.0 * t2 * z - 8.0 * t2 * z2 - 13.0 * t3 * z;
    poly.coefficients[3] = 2.0 * t2 + 2.0 * t3 + 8.0 * t2 * z + 4.0 * t2 * z2 + 16.0 * t3 * z;
    poly.coefficients[4] = -(t2 * z + 5.0 * t3 + 9.0 * t3 * z);
    poly.coefficients[5] = 4.0 * t3 + 2.0 * t3 * z;
    poly.coefficients[6] = -t3;
    return poly;
}

double unique_root_in_unit_interval(const Polynomial& p, double tol, const std::string& context) {
    const std::vector<double> all = real_roots_in(p, 0.0, 1.0, tol);
    std::vector<double> interior;
    std::vector<double> rejected;
    for (double r : all) {
        if (r > tol && r < 1.0 - tol) {
            interior.push_back(r);
        } else {
            rejected.push_back(r);
        }
    }
    if (interior.size() == 1) {
        return interior.front();
    }
    std::ostringstream msg;
    msg << context << ": expected exactly one root in (0,1), found " << interior.size()
        << "; interior = [";
    for (std::size_t k = 0; k < interior.size(); ++k) {
        msg << (k ? ", " : "") << interior[k];
    }
    msg << "], endpoint-rejected = [";
    for (std::size_t k = 0; k < rejected.size(); ++k) {
        msg << (k ? ", " : "") << rejected[k];
    }
    msg << "]";
    if (interior.empty()) {
        throw NoRootInUnitInterval(msg.str());
    }
    throw MultipleRootsInUnitInterval(msg.str());
}

double solve_beta(const ThetaPair& thetas, double tol) {
    require_tol(tol);
    const BetaPolynomial poly = build_beta_polynomial(thetas);
    std::ostringstream ctx;
    ctx << "intensity equation at theta_1=" << thetas.theta_1 << " theta_z=" << thetas.theta_z;
    return unique_root_in_unit_interval(poly.as_polynomial(), tol, ctx.str());
}

double limit_beta_theta1_infinity(double theta_z, double tol) {
    require_tol(tol);
    if (!std::isfinite(theta_z) || theta_z < 0.0) {
        throw ThetaOutOfDomain("theta_z must be finite and >= 0");
    }
    const double z = theta_z;
    const Polynomial quintic({4.0 * z, -13.0 * z, 2.0 + 16.0 * z, -(5.0 + 9.0 * z),
                              4.0 + 2.0 * z, -1.0});
    std::ostringstream ctx;
    ctx << "theta_1->infinity limit equation at theta_z=" << theta_z;
    return unique_root_in_unit_interval(quintic, tol, ctx.str());
}

double beta_residual(const BetaPolynomial& poly, double beta) noexcept {
    const Polynomial p = poly.as_polynomial();
    const double denom = p.coeff_abs_sum();
    return denom > 0.0 ? std::abs(p(beta)) / denom : 0.0;
}

} // namespace frontrun
