#pragma once

// Wave excitation, PMSG back-EMF, and the ideal six-pulse diode bridge that
// feeds the Zeta converter input.

#include <array>

namespace wavesim {

enum class SpeedMode { kConstant, kWaveModulated };

struct WaveParams {
    double H = 1.0;        ///< wave height [m]
    double T = 10.0;       ///< wave period [s]
    double Kgc = 1.5;      ///< tidal current speed factor (stored, unused by the speed law)
    double wave_number = 0.408; ///< [1/m] (stored, unused by the speed law)
    SpeedMode speed_mode = SpeedMode::kConstant;
    double omega_m0 = 18.14;    ///< base mechanical speed [rad/s]
    double mod_depth = 0.0;     ///< speed modulation depth, in [0,1)

    double omega() const;  ///< wave angular frequency 2*pi/T [rad/s]
    void validate() const;
};

struct PmsgParams {
    double Rph = 0.0484;     ///< stator phase resistance [ohm]
    double La = 3.95e-4;     ///< armature inductance [H] (carried; commutation overlap neglected)
    double lambda = 0.1194;  ///< flux linkage [V*s]
    int pole_pairs = 8;

    void validate() const;
};

/// Surface elevation (H/2)*cos(omega*t) [m].
double wave_elevation(double t, const WaveParams& wp);

/// Mechanical rotor speed [rad/s]; constant or sinusoidally modulated by the
/// wave. Strictly positive for mod_depth < 1.
double rotor_speed(double t, const WaveParams& wp);

/// Balanced three-phase back-EMF set, peak lambda*omega_e per phase.
std::array<double, 3> pmsg_emf(double theta_e, double omega_e, const PmsgParams& pm);

/// Ideal six-pulse bridge output: envelope max-min of the phase EMFs minus
/// the series resistive drop of the two conducting phases, clamped at >= 0.
double rectifier_output(double ea, double eb, double ec, double i_dc,
                        const PmsgParams& pm);

} // namespace wavesim
