#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ncps {

enum class ModeRole {
  ParticleX,
  ParticleY,
  ParticleZ,
  AuxA1,
  AuxA2,
  AuxA3,
  AuxB1,
  AuxB2,
  AuxB3,
};

/// Which quadrature of a mode carries real matrix entries.
///
///   Position: x = (a + a^+)/sqrt(2s),      p = i sqrt(s/2) (a^+ - a)
///   Momentum: x = i (a^+ - a)/sqrt(2s),    p = -sqrt(s/2) (a + a^+)
///
/// The two realizations are unitarily equivalent (phase i^n on the number
/// basis), so both satisfy [x, p] = i, Hermiticity, and the same vacuum
/// moments. Builders put the a-auxiliary modes in the Momentum gauge, which
/// makes every Hamiltonian in this package purely real symmetric.
enum class ModeGauge { Position, Momentum };

struct ModeSpec {
  ModeRole role;
  int cap;                   ///< occupations 0 .. cap-1
  double ref_frequency;      ///< frequency defining the mode's ladder (1 for auxiliary modes)
  double mass_scale;         ///< mass * ref_frequency entering the x, p normalization
  ModeGauge gauge = ModeGauge::Position;
};

class FockBasis;
using BasisPtr = std::shared_ptr<const FockBasis>;

/// Truncated multi-mode bosonic basis with an exact mixed-radix
/// state-index <-> occupation-tuple bijection (mode 0 varies fastest).
class FockBasis {
 public:
  static constexpr std::size_t kDefaultDimensionBudget = 2'000'000;

  static BasisPtr build(std::vector<ModeSpec> modes,
                        std::size_t dimension_budget = kDefaultDimensionBudget);

  std::size_t dimension() const { return dimension_; }
  int n_modes() const { return static_cast<int>(modes_.size()); }
  const ModeSpec& mode(int k) const { return modes_.at(static_cast<std::size_t>(k)); }
  std::size_t stride(int k) const { return strides_.at(static_cast<std::size_t>(k)); }
  int min_cap() const;

  int occupation(std::size_t state, int mode) const;
  std::vector<int> occupations(std::size_t state) const;
  std::size_t state_index(const std::vector<int>& occ) const;

  std::vector<int> modes_with_roles(std::initializer_list<ModeRole> roles) const;
  std::vector<int> particle_modes() const;
  std::vector<int> aux_a_modes() const;
  std::vector<int> aux_b_modes() const;
  std::optional<int> find_mode(ModeRole role) const;

  explicit FockBasis(std::vector<ModeSpec> modes, std::size_t dimension_budget);

 private:
  std::vector<ModeSpec> modes_;
  std::vector<std::size_t> strides_;
  std::size_t dimension_ = 0;
};

/// Sparse operator on a FockBasis, stored as re + i*im with both parts real
/// sparse row-major. Operators built from these modes are purely real or
/// purely imaginary term by term, so the split keeps memory and matvec cost
/// at real-arithmetic rates while still supporting general complex algebra.
class FockOperator {
 public:
  using RealSparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;
  using Complex = std::complex<double>;

  FockOperator() = default;
  FockOperator(BasisPtr basis, RealSparse re, RealSparse im);

  static FockOperator zero(BasisPtr basis);
  static FockOperator identity(BasisPtr basis);

  const BasisPtr& basis() const { return basis_; }
  std::size_t dimension() const { return basis_ ? basis_->dimension() : 0; }
  const RealSparse& real_part() const { return re_; }
  const RealSparse& imag_part() const { return im_; }
  bool is_real() const { return im_.nonZeros() == 0; }
  std::int64_t nnz() const;

  FockOperator& operator+=(const FockOperator& other);
  FockOperator& operator-=(const FockOperator& other);
  friend FockOperator operator+(FockOperator a, const FockOperator& b) { return a += b; }
  friend FockOperator operator-(FockOperator a, const FockOperator& b) { return a -= b; }
  FockOperator operator*(const FockOperator& other) const;
  FockOperator scaled(Complex factor) const;
  FockOperator adjoint() const;

  void apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const;  // requires is_real()
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd& x) const;

  double max_abs_entry() const;
  double inf_norm() const;            ///< max over rows of sum |entry|
  double hermiticity_defect() const;  ///< max |A - A^+| entrywise (allocates transposes)

  Eigen::MatrixXcd to_dense() const;
  Eigen::MatrixXd to_dense_real() const;  // requires is_real()

  /// Coordinate-list text: one `dim nnz` header line then `i j value` lines
  /// in row-major order; complex values are printed as `(re,im)`.
  std::string to_coordinate_text() const;

  void prune(double reference = 1.0, double eps = 0.0);

  /// Calls fn(row, col, value) for every stored entry, row-major, columns
  /// ascending, with re and im parts merged.
  template <typename Fn>
  void for_each_entry(Fn&& fn) const;

 private:
  BasisPtr basis_;
  RealSparse re_;
  RealSparse im_;

  void check_same_basis(const FockOperator& other) const;
};

FockOperator commutator(const FockOperator& a, const FockOperator& b);

enum class LadderKind { Lower, Raise };

/// Single-mode ladder operator acting as identity on all other modes:
/// <n+1| raise |n> = sqrt(n+1), <n-1| lower |n> = sqrt(n).
FockOperator ladder(const BasisPtr& basis, int mode, LadderKind kind);

/// Canonical pair on one mode, honoring the mode's gauge. mass_scale must be
/// positive; auxiliary modes use mass_scale = 1 so that <0|x^2|0> = 1/2.
std::pair<FockOperator, FockOperator> position_momentum(const BasisPtr& basis, int mode,
                                                        double mass_scale);

/// Diagonal 0/1 projector onto states with every occupation <= cap-1-guard.
FockOperator interior_projector(const BasisPtr& basis, int guard);

/// Interior mask as a dense 0/1 vector.
Eigen::VectorXd interior_mask(const BasisPtr& basis, int guard);

/// Max |entry| over entries whose row and column are both interior.
double max_abs_interior(const FockOperator& op, int guard);

enum class Prim { Lower, Raise, Position, Momentum };

struct Factor {
  int mode;
  Prim prim;
};

/// coeff * (ordered product of per-mode primitives). Factors on distinct
/// modes commute; factors on one mode are multiplied in the order written.
struct ProductTerm {
  std::complex<double> coeff;
  std::vector<Factor> factors;
};

/// Builds sum_t coeff_t * prod(factors_t) as one sparse operator.
///
/// The descriptor must be Hermitian as a whole (each term self-adjoint or
/// paired with its adjoint); this is verified and a violation reported with
/// the first non-self-adjoint term. Position/Momentum primitives take their
/// scale and gauge from the basis mode they act on.
FockOperator compose(const BasisPtr& basis, const std::vector<ProductTerm>& terms);

/// Expectation of op in the vacuum of `vacuum_modes`, as an operator on the
/// remaining modes. `reduced` must hold exactly the kept modes with
/// unchanged caps and order.
FockOperator vacuum_section(const FockOperator& op, const std::vector<int>& vacuum_modes,
                            const BasisPtr& reduced);

/// Lifts a vector on `sub` (a prefix or any subset of modes of `full`) to the
/// full basis by placing every remaining mode in its vacuum.
Eigen::VectorXd embed_with_vacuum(const Eigen::VectorXd& sub_vec, const BasisPtr& sub,
                                  const std::vector<int>& sub_modes_in_full,
                                  const BasisPtr& full);

template <typename Fn>
void FockOperator::for_each_entry(Fn&& fn) const {
  const auto outer = static_cast<Eigen::Index>(dimension());
  for (Eigen::Index row = 0; row < outer; ++row) {
    RealSparse::InnerIterator it_re(re_, row);
    RealSparse::InnerIterator it_im(im_, row);
    while (it_re || it_im) {
      if (it_re && (!it_im || it_re.col() < it_im.col())) {
        fn(row, it_re.col(), Complex(it_re.value(), 0.0));
        ++it_re;
      } else if (it_im && (!it_re || it_im.col() < it_re.col())) {
        fn(row, it_im.col(), Complex(0.0, it_im.value()));
        ++it_im;
      } else {
        fn(row, it_re.col(), Complex(it_re.value(), it_im.value()));
        ++it_re;
        ++it_im;
      }
    }
  }
}

}  // namespace ncps
