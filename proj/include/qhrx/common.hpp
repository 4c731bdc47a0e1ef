#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace qhrx {

// Exact SI constants (2019 redefinition).
inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kLightSpeed = 299792458.0;         // m/s
inline constexpr double kElementaryCharge = 1.602176634e-19;  // C

inline constexpr double kPi = 3.14159265358979323846;

/// Energy of one photon at the given vacuum wavelength [J].
inline double photon_energy(double wavelength_m) {
    return kPlanck * kLightSpeed / wavelength_m;
}

// Error taxonomy: ConfigError -> CLI exit 2, NumericError -> CLI exit 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

inline double db_to_power_ratio(double db) { return std::pow(10.0, db / 10.0); }
inline double db_to_amplitude_ratio(double db) { return std::pow(10.0, db / 20.0); }
inline double power_ratio_to_db(double ratio) { return 10.0 * std::log10(ratio); }

}  // namespace qhrx
