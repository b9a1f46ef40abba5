#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace ncps {

/// Dimensionless model inputs, natural units (hbar = 1, Planck length = 1).
///
/// The auxiliary-oscillator mass is eliminated by the length convention
/// sqrt(hbar / (m_osc * omega_osc)) = l_P, so it never appears as a field.
struct ModelParams {
  double c_theta = 0.1;     ///< coordinate-noncommutativity constant
  double c_eta = 0.1;       ///< momentum-noncommutativity constant
  double mass = 1.0;        ///< particle mass
  double omega = 1.0;       ///< trap frequency; 0 selects the free particle
  double omega_osc = 100.0; ///< auxiliary-oscillator frequency
  double alpha = 1.0;       ///< momentum weight of the squared-length operator
  double beta = 1.0;        ///< coordinate weight of the squared-length operator

  /// Throws std::invalid_argument unless
  /// mass > 0, omega >= 0, omega_osc > 0, c_theta >= 0, c_eta >= 0
  /// and every field is finite.
  void validate() const;

  /// Parse the `key=value` config format. Recognized keys: c_theta, c_eta,
  /// mass, omega, omega_osc, alpha, beta. Unknown keys and malformed values
  /// are errors. Missing keys keep their defaults. Blank lines and lines
  /// starting with '#' are ignored. The result is validated.
  static ModelParams from_config_text(const std::string& text);
  static ModelParams from_config_file(const std::filesystem::path& path);
};

/// Ground-state average of the squared coordinate-noncommutativity vector:
/// 3/2 * c_theta^2.
double mean_theta_sq(const ModelParams& params);

/// Ground-state average of the squared momentum-noncommutativity vector:
/// 3/2 * c_eta^2.
double mean_eta_sq(const ModelParams& params);

namespace detail {
/// Splits `key=value` lines, trimming blanks; shared by the model parser and
/// the experiment-config parser.
std::map<std::string, std::string> parse_kv_text(const std::string& text);
double parse_double(const std::string& key, const std::string& value);
long parse_long(const std::string& key, const std::string& value);
}  // namespace detail

}  // namespace ncps
