#pragma once

#include <string>
#include <vector>

#include "ncps/params.hpp"

namespace ncps {

struct SpectrumRow {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  double energy = 0.0;
};

/// Ordered level table. Rows are sorted by energy, ties broken
/// lexicographically by (n1, n2, n3).
struct SpectrumTable {
  std::vector<SpectrumRow> rows;
  std::string provenance;  ///< "analytic", "fock-numeric" or "williamson"
  std::string metadata;    ///< free text: truncations, tolerances, ...

  void sort_rows();

  /// CSV with header `n1,n2,n3,energy`, 17 significant digits.
  std::string to_csv() const;
};

/// Builds the table of an isotropic ladder E = level_scale * (n1+n2+n3+3/2)
/// over all occupation triples with n1+n2+n3 <= n_max.
SpectrumTable isotropic_ladder_table(double level_scale, int n_max,
                                     std::string provenance,
                                     std::string metadata);

/// Trap frequency induced on a free particle by momentum noncommutativity:
/// sqrt(<eta^2> / (6 m^2)).
double free_particle_frequency(const ModelParams& params);

/// Free-particle levels E = free_particle_frequency * (n1+n2+n3+3/2).
SpectrumTable free_particle_spectrum(const ModelParams& params, int n_max);

/// Effective oscillator mass 6m / (6 + m^2 omega^2 <theta^2>).
double effective_mass(const ModelParams& params);

/// Effective oscillator frequency
/// sqrt((m omega^2 + <eta^2>/(6m)) (1/m + m omega^2 <theta^2>/6)).
double effective_frequency(const ModelParams& params);

/// Oscillator levels E = effective_frequency * (n1+n2+n3+3/2).
SpectrumTable oscillator_spectrum(const ModelParams& params, int n_max);

/// Eigenvalues of the squared phase-space length alpha^2 P^2 + beta^2 X^2:
/// q^2 = sqrt((2 beta^2 + alpha^2 <eta^2>/3)(2 alpha^2 + beta^2 <theta^2>/3))
///       * (n1+n2+n3+3/2).
/// Rejects alpha = beta = 0.
SpectrumTable length_sq_spectrum(const ModelParams& params, int n_max);

/// Minimal lengths, each defined as the square root of the ground-state
/// eigenvalue of the corresponding squared-length operator:
///   q_min — phase space (weights alpha, beta),
///   r_min — coordinate space (alpha=0, beta=1),
///   p_min — momentum space (alpha=1, beta=0).
struct MinimalLengths {
  double q_min = 0.0;
  double r_min = 0.0;
  double p_min = 0.0;
};

MinimalLengths minimal_lengths(const ModelParams& params);

}  // namespace ncps
