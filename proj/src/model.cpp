#include "dcoulomb/model.hpp"

namespace dcoulomb {

namespace {

void require_positive_rho(double rho, const char* where) {
    if (!(rho > 0.0)) throw std::domain_error(std::string(where) + ": rho must be positive");
}

}  // namespace

FJet deform_f(const DeformedCoulombModel& model, double rho) {
    require_positive_rho(rho, "deform_f");
    return FJet{1.0 + model.alpha * rho, model.alpha, 0.0};
}

EffectiveCoulomb effective_charge(const DeformedCoulombModel& model, const Picture& picture) {
    const double a = model.alpha;
    return std::visit(
        [&](const auto& p) -> EffectiveCoulomb {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, Deformed>) {
                return {model.Z, 0.0};
            } else if constexpr (std::is_same_v<P, PositionDependentMass>) {
                const double d = p.ordering.delta;
                const double lam = p.ordering.lambda;
                const double one_dl = 1.0 - d - lam;
                return {model.Z - 0.5 * a * one_dl,
                        0.5 * a * a * (one_dl + (0.5 - d) * (0.5 - lam))};
            } else {
                static_assert(std::is_same_v<P, CurvedSpace>);
                return {model.Z + a, -0.5 * a * a};
            }
        },
        picture);
}

double effective_potential_pdm(const DeformedCoulombModel& model, const OrderingParams& ordering,
                               double rho) {
    require_positive_rho(rho, "effective_potential_pdm");
    const FJet f = deform_f(model, rho);
    const double u2 = -model.Z / rho;
    const double div_term = 0.5 * (1.0 - ordering.delta - ordering.lambda) * f.f *
                            (2.0 * f.df / rho + f.ddf);
    const double grad_term = (0.5 - ordering.delta) * (0.5 - ordering.lambda) * f.df * f.df;
    return u2 + 0.5 * (div_term + grad_term);
}

double effective_potential_curved(const DeformedCoulombModel& model, double rho) {
    require_positive_rho(rho, "effective_potential_curved");
    const FJet f = deform_f(model, rho);
    return -model.Z / rho - 0.5 * f.f * (2.0 * f.df / rho + f.ddf) + 0.5 * f.df * f.df;
}

double channel_potential(const DeformedCoulombModel& model, const Picture& picture, int l,
                         double rho) {
    require_positive_rho(rho, "channel_potential");
    if (l < 0) throw std::invalid_argument("channel_potential: l must be non-negative");
    const EffectiveCoulomb eff = effective_charge(model, picture);
    const FJet f = deform_f(model, rho);
    const double L2 = static_cast<double>(l) * (l + 1);
    return 0.5 * (f.f * f.f * L2 / (rho * rho) + f.f * f.df / rho) - eff.z_eff / rho +
           eff.const_shift;
}

double continuum_threshold(const DeformedCoulombModel& model, const Picture& picture, int l) {
    if (l < 0) throw std::invalid_argument("continuum_threshold: l must be non-negative");
    const EffectiveCoulomb eff = effective_charge(model, picture);
    const double L2 = static_cast<double>(l) * (l + 1);
    return 0.5 * model.alpha * model.alpha * (L2 + 1.0) + eff.const_shift;
}

}  // namespace dcoulomb
