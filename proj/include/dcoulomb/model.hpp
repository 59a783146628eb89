#pragma once

#include <stdexcept>
#include <variant>

namespace dcoulomb {

/// Physical configuration of the deformed Coulomb problem.
///
/// Everything is dimensionless: lengths are measured in units of the
/// characteristic length a (the Bohr radius for the Coulomb potential),
/// energies in units of V0 = hbar^2/(m0 a^2) = 2 Ry. The potential is
/// U(rho) = -Z/rho and the deforming function is f(rho) = 1 + alpha*rho.
struct DeformedCoulombModel {
    double Z;      ///< atomic number, Z > 0
    double alpha;  ///< deformation parameter, alpha >= 0

    DeformedCoulombModel(double Z_, double alpha_) : Z(Z_), alpha(alpha_) {
        if (!(Z > 0.0))
            throw std::invalid_argument("DeformedCoulombModel: Z must be positive");
        if (!(alpha >= 0.0))
            throw std::invalid_argument("DeformedCoulombModel: alpha must be non-negative");
    }
};

/// Value and first two derivatives of the deforming function at one point.
struct FJet {
    double f;
    double df;
    double ddf;
};

/// f(rho) = 1 + alpha*rho together with f' and f''. Requires rho > 0.
FJet deform_f(const DeformedCoulombModel& model, double rho);

/// von Roos ordering parameters for the position-dependent-mass kinetic term.
/// The third exponent is fixed by the constraint delta + kappa + lambda = 2.
struct OrderingParams {
    double delta = 0.0;
    double lambda = 0.0;

    double kappa() const { return 2.0 - delta - lambda; }
};

struct Deformed {};
struct PositionDependentMass {
    OrderingParams ordering;
};
struct CurvedSpace {};

/// Which of the three equivalent formulations is being used. All three reduce
/// to the deformed picture with a shifted Coulomb charge plus a constant.
using Picture = std::variant<Deformed, PositionDependentMass, CurvedSpace>;

/// The reduced problem: a Coulomb potential -z_eff/rho plus a constant.
struct EffectiveCoulomb {
    double z_eff;
    double const_shift;
};

/// Effective charge and additive constant for a picture:
///   deformed:  (Z, 0)
///   pdm:       (Z - (alpha/2)(1 - delta - lambda),
///               (alpha^2/2)[1 - delta - lambda + (1/2-delta)(1/2-lambda)])
///   curved:    (Z + alpha, -alpha^2/2)
EffectiveCoulomb effective_charge(const DeformedCoulombModel& model, const Picture& picture);

/// Effective potential of the position-dependent-mass picture, evaluated from
/// the general ordering-dependent correction terms (not the closed Coulomb
/// form). For f = 1 + alpha*rho it is algebraically identical to
/// -z_eff/rho + const_shift; tests assert this.
double effective_potential_pdm(const DeformedCoulombModel& model, const OrderingParams& ordering,
                               double rho);

/// Effective potential of the curved-space picture, from the general
/// f-dependent form; equals -(Z+alpha)/rho - alpha^2/2 for f = 1 + alpha*rho.
double effective_potential_curved(const DeformedCoulombModel& model, double rho);

/// Radial-channel potential U^(l)(rho) of the reduced problem,
///   (1/2) ( f^2 L^2/rho^2 + f f'/rho ) - z_eff/rho + const_shift,
/// with L^2 = l(l+1). This is what the grid oracle discretises.
double channel_potential(const DeformedCoulombModel& model, const Picture& picture, int l,
                         double rho);

/// Limit of the channel potential as rho -> infinity:
/// alpha^2 (L^2+1)/2 + const_shift. Bound energies lie strictly below it.
double continuum_threshold(const DeformedCoulombModel& model, const Picture& picture, int l);

}  // namespace dcoulomb
