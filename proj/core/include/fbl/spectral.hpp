#pragma once

#include <vector>

#include "fbl/field.hpp"

namespace fbl {

/// Symmetric normalization:
///   û(ξ) = (2π)^{-d/2} Σ_x f(x) e^{-i x·ξ} (2π/n)^d,
///   f(x) = (2π)^{-d/2} Σ_ξ û(ξ) e^{i x·ξ}.
/// With this pairing Σ_x |f|^2 (2π/n)^d = Σ_ξ |û|^2 exactly.
SpectralField forward_transform(const PhysicalField& f);
PhysicalField inverse_transform(const SpectralField& g);

/// What singular operations do with a nonzero zero mode.
enum class MeanPolicy { reject, remove };

/// Zero-mode coefficient of each component.
std::vector<cplx> zero_mode(const SpectralField& g);
/// Kills the zero mode in place and returns what was removed.
std::vector<cplx> remove_mean(SpectralField& g);

/// Diagonal Fourier multiplier.
struct Multiplier {
  enum class Kind { derivative, riesz, inverse_laplacian, heat, fractional };

  Kind kind = Kind::heat;
  Freq alpha{0, 0, 0};  // derivative multi-index
  int axis = 0;         // Riesz direction
  double time = 0.0;    // heat symbol e^{-t|ξ|^2}
  double order = 0.0;   // |ξ|^order

  static Multiplier derivative(Freq alpha) { return {Kind::derivative, alpha, 0, 0.0, 0.0}; }
  static Multiplier riesz(int axis) { return {Kind::riesz, {0, 0, 0}, axis, 0.0, 0.0}; }
  static Multiplier inverse_laplacian() { return {Kind::inverse_laplacian, {0, 0, 0}, 0, 0.0, 0.0}; }
  static Multiplier heat(double t) { return {Kind::heat, {0, 0, 0}, 0, t, 0.0}; }
  static Multiplier fractional(double s) { return {Kind::fractional, {0, 0, 0}, 0, 0.0, s}; }

  /// Singular symbols are undefined at ξ = 0; they map the zero mode to 0.
  bool singular() const noexcept;
  /// Odd (derivative-type) symbols zero every mode that touches the Nyquist plane.
  bool zeroes_nyquist() const noexcept;
  cplx symbol(const Freq& xi, double radius2) const noexcept;
};

/// Coefficient-wise product with the multiplier symbol, applied to every component.
/// Throws DomainError for a singular multiplier on a field with nonzero mean
/// unless `policy` is MeanPolicy::remove.
SpectralField apply_multiplier(const SpectralField& g, const Multiplier& m,
                               MeanPolicy policy = MeanPolicy::reject);

/// Leray projector with symbol δ_ij - ξ_iξ_j/|ξ|^2. Requires 3 components and zero mean.
SpectralField leray_project(const SpectralField& u);

/// v̂ = û/|ξ|^2, v̂(0) = 0: solves -Δv = u on the torus.
SpectralField volume_potential(const SpectralField& u, MeanPolicy policy = MeanPolicy::reject);

/// Σ_k iξ_k û_k for a field with `dims` components.
SpectralField divergence(const SpectralField& u);
/// (iξ_k û)_k for a scalar field.
SpectralField gradient(const SpectralField& u);
/// max_ξ |ξ·û(ξ)| relative to the l2 size of û.
double divergence_defect(const SpectralField& u);

/// Hermitian defect max|û(-ξ) - conj û(ξ)| / max|û|; zero for real fields.
double hermitian_defect(const SpectralField& g);
/// Replaces û by the Hermitian part (û(ξ) + conj û(-ξ))/2.
void make_hermitian(SpectralField& g);

/// Zeroes every mode touching the unpaired frequency -n/2.
void clear_nyquist(SpectralField& g);
/// 2/3-rule truncation: zeroes modes with some |ξ_k| > n/3.
void truncate_two_thirds(SpectralField& g);

/// Alias-free products of trigonometric polynomials. Inputs are evaluated on a
/// 3n/2 grid, multiplied there and transformed back; the result keeps the
/// symmetric band |ξ_k| < n/2, so every retained coefficient equals the exact
/// product coefficient.
class PaddedProduct {
 public:
  explicit PaddedProduct(const GridSpec& grid);

  /// Physical samples of one component on the padded grid.
  std::vector<cplx> evaluate(std::span<const cplx> coefficients) const;
  /// Coefficients of padded samples restricted to the base grid.
  std::vector<cplx> project(std::vector<cplx> samples) const;

  const GridSpec& grid() const noexcept { return grid_; }
  int padded_n() const noexcept { return m_; }

 private:
  GridSpec grid_;
  int m_;
  std::vector<std::size_t> embed_;  // base flat index -> padded flat index
  std::vector<unsigned char> keep_;
};

/// Componentwise product of two fields with equal component counts, or of a
/// scalar with a vector field.
SpectralField multiply(const SpectralField& a, const SpectralField& b);

/// Shell-binned energy E(k) = Σ_{round|ξ| = k} |û(ξ)|^2, summed over components.
std::vector<double> radial_spectrum(const SpectralField& g);

/// l2 energy on either side, with the matching measure.
double physical_energy(const PhysicalField& f);
double spectral_energy(const SpectralField& g);

}  // namespace fbl
