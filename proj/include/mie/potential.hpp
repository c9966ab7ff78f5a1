#pragma once

#include <string_view>
#include <variant>

namespace mie {

/// V(r) = A/r^2 + B/r + C for a particle of mass M, with reduced Planck
/// constant hbar. Natural units (M = hbar = 1) unless set explicitly.
struct PotentialParams {
    double A = 0.0;
    double B = 0.0;
    double C = 0.0;
    double M = 1.0;
    double hbar = 1.0;

    /// Throws mie::domain_error unless M > 0 and hbar > 0 (all finite).
    void validate() const;

    friend bool operator==(const PotentialParams&, const PotentialParams&) = default;
};

/// Two-exponent Mie form
///   V(r) = D0 [ a/(b-a) (r0/r)^b - b/(b-a) (r0/r)^a ].
struct MiePreset {
    double D0 = 1.0;
    double r0 = 1.0;
    double a = 2.0;
    double b = 1.0;

    void validate() const;

    friend bool operator==(const MiePreset&, const MiePreset&) = default;
};

/// General Mie form together with the particle mass and hbar, for the
/// numerical oracle (no closed-form spectrum unless (a, b) = (2, 1)).
struct MieSystem {
    MiePreset preset;
    double M = 1.0;
    double hbar = 1.0;

    friend bool operator==(const MieSystem&, const MieSystem&) = default;
};

using AnyPotential = std::variant<PotentialParams, MieSystem>;

enum class KratzerConvention { standard, inverted };

std::string_view to_string(KratzerConvention c);

double eval_potential(const PotentialParams& p, double r);
double eval_mie_general(const MiePreset& p, double r);
double eval_potential(const AnyPotential& p, double r);

double mass_of(const AnyPotential& p);
double hbar_of(const AnyPotential& p);
/// lim_{r -> inf} V(r): C for the three-term form, 0 for the general form.
double asymptote_of(const AnyPotential& p);
/// Coefficient of 1/r^2 in V, when the potential has a pure 1/r^2 core
/// (three-term form or (a, b) containing 2 as the dominant exponent).
/// Returns false when the small-r behaviour is not of that type.
bool inverse_square_coefficient(const AnyPotential& p, double& coefficient);

/// A = D0 r0^2, B = -2 D0 r0, C = 0.
PotentialParams kratzer_fues(double D0, double r0, double M = 1.0, double hbar = 1.0);

/// standard:      A = D0 r0^2,  B = -2 D0 r0, C = D0  (V = D0 ((r - r0)/r)^2)
/// inverted: A = -D0 r0^2, B = 2 D0 r0,  C = -D0 (V = -D0 ((r - r0)/r)^2)
PotentialParams modified_kratzer(double D0, double r0, double M = 1.0, double hbar = 1.0,
                                 KratzerConvention convention = KratzerConvention::standard);

/// A = C = 0.
PotentialParams coulomb(double B, double M = 1.0, double hbar = 1.0);

} // namespace mie
