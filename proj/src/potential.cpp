#include "mie/potential.hpp"

#include "mie/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mie {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw domain_error(std::string(what) + " must be positive and finite");
}

void require_radius(double r) {
    if (!(r > 0.0)) throw domain_error("potential: r must be positive, got " + std::to_string(r));
}

} // namespace

void PotentialParams::validate() const {
    if (!std::isfinite(A) || !std::isfinite(B) || !std::isfinite(C))
        throw domain_error("PotentialParams: A, B, C must be finite");
    require_positive(M, "PotentialParams: M");
    require_positive(hbar, "PotentialParams: hbar");
}

void MiePreset::validate() const {
    require_positive(D0, "MiePreset: D0");
    require_positive(r0, "MiePreset: r0");
    if (!std::isfinite(a) || !std::isfinite(b)) throw domain_error("MiePreset: exponents must be finite");
    if (a == b) throw domain_error("MiePreset: exponents a and b must differ");
}

std::string_view to_string(KratzerConvention c) {
    return c == KratzerConvention::standard ? "standard" : "inverted";
}

double eval_potential(const PotentialParams& p, double r) {
    require_radius(r);
    const double inv = 1.0 / r;
    return (p.A * inv + p.B) * inv + p.C;
}

double eval_mie_general(const MiePreset& p, double r) {
    require_radius(r);
    p.validate();
    const double x = p.r0 / r;
    const double d = p.b - p.a;
    return p.D0 * (p.a / d * std::pow(x, p.b) - p.b / d * std::pow(x, p.a));
}

double eval_potential(const AnyPotential& p, double r) {
    if (const auto* three = std::get_if<PotentialParams>(&p)) return eval_potential(*three, r);
    return eval_mie_general(std::get<MieSystem>(p).preset, r);
}

double mass_of(const AnyPotential& p) {
    return std::visit([](const auto& v) { return v.M; }, p);
}

double hbar_of(const AnyPotential& p) {
    return std::visit([](const auto& v) { return v.hbar; }, p);
}

double asymptote_of(const AnyPotential& p) {
    if (const auto* three = std::get_if<PotentialParams>(&p)) return three->C;
    return 0.0;
}

bool inverse_square_coefficient(const AnyPotential& p, double& coefficient) {
    if (const auto* three = std::get_if<PotentialParams>(&p)) {
        coefficient = three->A;
        return true;
    }
    const MiePreset& m = std::get<MieSystem>(p).preset;
    const double top = std::max(m.a, m.b);
    if (top != 2.0) return false;
    // Coefficient of (r0/r)^2 times r0^2.
    const double d = m.b - m.a;
    const double c = m.b == 2.0 ? m.D0 * m.a / d : -m.D0 * m.b / d;
    coefficient = c * m.r0 * m.r0;
    return true;
}

PotentialParams kratzer_fues(double D0, double r0, double M, double hbar) {
    require_positive(D0, "kratzer_fues: D0");
    require_positive(r0, "kratzer_fues: r0");
    PotentialParams p{D0 * r0 * r0, -2.0 * D0 * r0, 0.0, M, hbar};
    p.validate();
    return p;
}

PotentialParams modified_kratzer(double D0, double r0, double M, double hbar, KratzerConvention convention) {
    require_positive(D0, "modified_kratzer: D0");
    require_positive(r0, "modified_kratzer: r0");
    const double sign = convention == KratzerConvention::standard ? 1.0 : -1.0;
    PotentialParams p{sign * D0 * r0 * r0, -sign * 2.0 * D0 * r0, sign * D0, M, hbar};
    p.validate();
    return p;
}

PotentialParams coulomb(double B, double M, double hbar) {
    PotentialParams p{0.0, B, 0.0, M, hbar};
    p.validate();
    return p;
}

} // namespace mie
