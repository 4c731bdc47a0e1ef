#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "qhrx/common.hpp"

namespace qhrx::pic {

/// Thermo-optic phase shifter response. The phase is polynomial in the
/// dissipated electrical power P = V^2 / R_heater, which keeps the model
/// linear in power while still polynomial in voltage.
struct TopsPhasePoly {
    std::vector<double> coeffs_rad;  // c[k] multiplies P^k, P in watts
    double heater_ohms = 100.0;
    double v_min_v = 0.0;
    double v_max_v = 10.0;
};

/// Physical state of the tunable optical hybrid.
///
/// Rail convention used throughout: inputs [signal, aux1, lo, aux2],
/// outputs [PD1, PD2, PD3, PD4]. PD1/PD2 form the vBS1 balanced pair,
/// PD3/PD4 the vBS2 pair. aux ports are the unused coupler inputs.
struct PicState {
    double dc1_reflectivity = 0.5;   // input coupler, signal side
    double dc2_reflectivity = 0.5;   // input coupler, LO side
    double vbs1_reflectivity = 0.5;  // internal couplers of vBS1 (both)
    double vbs2_reflectivity = 0.5;  // internal couplers of vBS2 (both)

    double v_r1_v = 0.0;  // vBS1 TOPS
    double v_r2_v = 0.0;  // vBS2 TOPS
    double v_r3_v = 0.0;  // LO phase TOPS

    TopsPhasePoly poly_r1;
    TopsPhasePoly poly_r2;
    TopsPhasePoly poly_r3;

    double imbalance_floor = 1.35e-5;  // delta of the CMRR model
    double insertion_loss_in1_db = 0.0;
    double insertion_loss_in2_db = 0.0;

    void validate() const;
};

/// Default state calibrated to the stock device profile: 70 mW per 2*pi,
/// 0.14 deg/mV phase-voltage slope at the 90 deg setpoint of R3, 2.0 mV
/// full width at half of the model CMRR maximum for R1/R2, voltages parked
/// at the balanced-hybrid working point.
PicState default_pic_state();

/// Evaluate a TOPS phase-voltage response [rad].
/// Throws ConfigError if the voltage is outside the calibrated range.
double tops_phase(double voltage_v, const TopsPhasePoly& poly);

/// Voltage that reaches the given phase, by bisection on the monotone
/// calibrated range.
double tops_voltage_for_phase(double phase_rad, const TopsPhasePoly& poly);

using Matrix4cd = Eigen::Matrix4cd;

/// Full transfer matrix of the hybrid: inputs [signal, aux1, lo, aux2] ->
/// photodiode fields [PD1..PD4]. Unitary when both insertion losses are 0.
Matrix4cd hybrid_transfer(const PicState& state);

/// CMRR clamp used when the imbalance is exactly zero.
inline constexpr double kCmrrCeilingDb = 200.0;

/// CMRR from the two photocurrents of one balanced pair,
/// 20*log10(((i1+i2)/2)/|i1-i2|). Throws NumericError if i1 + i2 == 0.
double cmrr_from_currents(double i1_a, double i2_a);

/// Sinusoidal MZI response model, -20*log10(|sin phi| + delta).
/// phi is the interferometric phase deviation from the balance point.
double cmrr_model(double phi_rad, double delta);

struct CmrrEstimate {
    double db = 0.0;
    bool lower_bound = false;  // set when p_bal was at/below the noise floor
};

/// Spectral-power form: p_un_quarter_dbm is P_un/4 already in dBm.
CmrrEstimate cmrr_from_powers(double p_un_quarter_dbm, double p_bal_dbm,
                              double noise_floor_dbm = -1e300);

/// Raw CMRR measurement record (AC tone method).
struct CmrrMeasurement {
    double i1_a = 0.0;
    double i2_a = 0.0;
    double p_un_dbm = 0.0;    // fully unbalanced spectral power at f_mod
    double p_bal_dbm = 0.0;   // balanced spectral power at f_mod
    double noise_floor_dbm = -200.0;
    double f_mod_hz = 500e3;
    double tia_gain_v_per_a = 1.0;
    double load_ohms = 50.0;

    double splitting_ratio() const { return i1_a / (i1_a + i2_a); }
};

/// Conic fit of heterodyne traces, A x^2 + B y^2 + C xy + D x + E y = 1.
struct EllipseFit {
    double a = 0, b = 0, c = 0, d = 0, e = 0;
    double v1 = 0.0;               // CH1 amplitude [V]
    double v2 = 0.0;               // CH2 amplitude [V]
    double delta_theta_deg = 0.0;  // LO phase shift
    double residual = 0.0;         // RMS algebraic residual
};

/// Least-squares conic fit and LO phase recovery,
/// delta_theta = acos(-C / (2 sqrt(AB))).
/// Throws NumericError on degenerate data or a non-elliptic fit.
EllipseFit estimate_lo_phase(const std::vector<double>& x_v,
                             const std::vector<double>& y_v);

/// Generate the parametric sweep (x, y) = (V1 cos(phi), V2 cos(phi + dtheta))
/// used by the phase characterization; noise_v adds white Gaussian noise.
void synthesize_phase_sweep(double v1, double v2, double dtheta_rad,
                            std::size_t n_points, double noise_v,
                            std::uint64_t seed, std::vector<double>& x_v,
                            std::vector<double>& y_v);

/// Bounded random-walk drift of the three TOPS phases.
struct DriftModel {
    double step_s = 1.0;
    double sigma_vbs_deg = 0.02;  // per-step walk std of each vBS phase
    double bound_vbs_deg = 0.45;  // reflection bound around balance
    double sigma_lo_deg = 0.05;
    double bound_lo_deg = 0.9;    // matches the observed +-0.9 deg swing
    std::uint64_t seed = 1;
};

struct DriftSeries {
    std::vector<double> t_s;
    std::vector<double> cmrr1_db;
    std::vector<double> cmrr2_db;
    std::vector<double> delta_theta_deg;
};

/// Deterministic given the seed. CMRR series go through cmrr_model with the
/// state's imbalance floor; the LO phase wanders around 90 deg.
DriftSeries simulate_drift(const PicState& state, const DriftModel& model,
                           double duration_s);

}  // namespace qhrx::pic
