#include "ncps/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <tuple>

namespace ncps {

namespace {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void SpectrumTable::sort_rows() {
  std::sort(rows.begin(), rows.end(), [](const SpectrumRow& a, const SpectrumRow& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return std::tie(a.n1, a.n2, a.n3) < std::tie(b.n1, b.n2, b.n3);
  });
}

std::string SpectrumTable::to_csv() const {
  std::string out = "n1,n2,n3,energy\n";
  for (const SpectrumRow& r : rows) {
    out += std::to_string(r.n1) + ',' + std::to_string(r.n2) + ',' +
           std::to_string(r.n3) + ',' + format_g17(r.energy) + '\n';
  }
  return out;
}

SpectrumTable isotropic_ladder_table(double level_scale, int n_max,
                                     std::string provenance,
                                     std::string metadata) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  SpectrumTable table;
  table.provenance = std::move(provenance);
  table.metadata = std::move(metadata);
  for (int n1 = 0; n1 <= n_max; ++n1)
    for (int n2 = 0; n1 + n2 <= n_max; ++n2)
      for (int n3 = 0; n1 + n2 + n3 <= n_max; ++n3)
        table.rows.push_back({n1, n2, n3, level_scale * (n1 + n2 + n3 + 1.5)});
  table.sort_rows();
  return table;
}

double free_particle_frequency(const ModelParams& params) {
  return std::sqrt(mean_eta_sq(params) / (6.0 * params.mass * params.mass));
}

SpectrumTable free_particle_spectrum(const ModelParams& params, int n_max) {
  return isotropic_ladder_table(free_particle_frequency(params), n_max, "analytic",
                                "free particle, m=" + std::to_string(params.mass));
}

double effective_mass(const ModelParams& params) {
  params.validate();
  const double m = params.mass;
  const double mw = m * params.omega;
  return 6.0 * m / (6.0 + mw * mw * mean_theta_sq(params));
}

double effective_frequency(const ModelParams& params) {
  params.validate();
  const double m = params.mass;
  const double w = params.omega;
  const double kinetic = 1.0 / m + m * w * w * mean_theta_sq(params) / 6.0;
  const double potential = m * w * w + mean_eta_sq(params) / (6.0 * m);
  return std::sqrt(kinetic * potential);
}

SpectrumTable oscillator_spectrum(const ModelParams& params, int n_max) {
  return isotropic_ladder_table(effective_frequency(params), n_max, "analytic",
                                "oscillator, m=" + std::to_string(params.mass) +
                                    " omega=" + std::to_string(params.omega));
}

namespace {

double length_sq_level_scale(const ModelParams& params) {
  params.validate();
  const double a2 = params.alpha * params.alpha;
  const double b2 = params.beta * params.beta;
  if (a2 == 0.0 && b2 == 0.0)
    throw std::invalid_argument("length_sq_spectrum: alpha and beta cannot both be zero");
  return std::sqrt((2.0 * b2 + a2 * mean_eta_sq(params) / 3.0) *
                   (2.0 * a2 + b2 * mean_theta_sq(params) / 3.0));
}

}  // namespace

SpectrumTable length_sq_spectrum(const ModelParams& params, int n_max) {
  return isotropic_ladder_table(length_sq_level_scale(params), n_max, "analytic",
                                "squared length, alpha=" + std::to_string(params.alpha) +
                                    " beta=" + std::to_string(params.beta));
}

MinimalLengths minimal_lengths(const ModelParams& params) {
  params.validate();
  MinimalLengths out;
  const bool degenerate = params.alpha == 0.0 && params.beta == 0.0;
  out.q_min = degenerate ? 0.0 : std::sqrt(1.5 * length_sq_level_scale(params));
  // Coordinate- and momentum-space ground eigenvalues follow from the
  // (alpha, beta) = (0, 1) and (1, 0) specializations.
  out.r_min = std::sqrt(1.5 * std::sqrt(2.0 * mean_theta_sq(params) / 3.0));
  out.p_min = std::sqrt(1.5 * std::sqrt(2.0 * mean_eta_sq(params) / 3.0));
  return out;
}

}  // namespace ncps
