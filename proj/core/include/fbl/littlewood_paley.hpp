#pragma once

#include <map>
#include <vector>

#include "fbl/field.hpp"

namespace fbl {

/// Radial dyadic partition χ, φ(r) = χ(r/2) - χ(r) restricted to one grid.
///
/// χ ≡ 1 on [0, 3/4], χ ≡ 0 on [4/3, ∞), with a C^order polynomial smoothstep
/// in between. The block range [j_min, j_max] is the smallest one whose blocks
/// sum to the identity on every nonzero lattice frequency: j_min = -1 reaches
/// |ξ| = 1 and j_max is the first j with 2^{j+1}·3/4 ≥ largest lattice radius.
class DyadicPartition {
 public:
  struct Entry {
    std::size_t index;
    double weight;
  };

  DyadicPartition(const GridSpec& grid, int order = 4);

  const GridSpec& grid() const noexcept { return grid_; }
  int order() const noexcept { return order_; }
  int j_min() const noexcept { return j_min_; }
  int j_max() const noexcept { return j_max_; }
  int block_count() const noexcept { return j_max_ - j_min_ + 1; }

  double chi(double r) const noexcept;
  double phi(double r) const noexcept;

  /// Lattice points where φ(2^{-j}|ξ|) ≠ 0, with their weights.
  const std::vector<Entry>& block_support(int j) const;
  /// Lattice points where χ(2^{-j}|ξ|) ≠ 0; j may range over [j_min-1, j_max+1].
  const std::vector<Entry>& cutoff_support(int j) const;

  /// Radial band on which Σ_j φ(2^{-j}r) = 1 holds by construction.
  double covered_low() const noexcept;
  double covered_high() const noexcept;

 private:
  GridSpec grid_;
  int order_;
  int j_min_;
  int j_max_;
  std::vector<std::vector<Entry>> blocks_;
  std::vector<std::vector<Entry>> cutoffs_;
};

/// Generalized smoothstep of order k: C^k, 0 at 0, 1 at 1, monotone.
double smoothstep(int order, double x) noexcept;

/// Throws DomainError when n < 16 (fewer than two full shells).
DyadicPartition build_partition(const GridSpec& grid, int order = 4);

/// Δ_j f: coefficients multiplied by φ(2^{-j}|ξ|).
SpectralField dyadic_block(const SpectralField& f, int j, const DyadicPartition& part);
/// S_j f: coefficients multiplied by χ(2^{-j}|ξ|).
SpectralField low_freq_cutoff(const SpectralField& f, int j, const DyadicPartition& part);

struct DyadicDecomposition {
  SpectralField source;
  std::map<int, SpectralField> blocks;

  SpectralField reconstruct() const;
};

DyadicDecomposition decompose(const SpectralField& f, const DyadicPartition& part);

/// Bony split uv = T_u v + T_v u + R(u, v) with
///   T_u v = Σ_j S_{j-1}u Δ_j v,   R(u, v) = Σ_{|j-j'| ≤ 1} Δ_j u Δ_{j'} v.
/// Products are alias free (see PaddedProduct), so the three parts add up to
/// multiply(u, v) to rounding.
struct Paraproduct {
  SpectralField t_uv;
  SpectralField t_vu;
  SpectralField remainder;

  SpectralField sum() const;
};

Paraproduct paraproduct_split(const SpectralField& u, const SpectralField& v,
                              const DyadicPartition& part);

}  // namespace fbl
