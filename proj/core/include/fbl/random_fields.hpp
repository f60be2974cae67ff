#pragma once

#include <cstdint>
#include <random>

#include "fbl/field.hpp"

namespace fbl {

/// Amplitude profile of random coefficients: flat, or |ξ|^{-slope}.
struct RandomFieldSpec {
  int components = 1;
  /// Support radii in lattice units: inner ≤ |ξ| ≤ outer (inner 0 gives a ball).
  double inner = 0.0;
  double outer = 4.0;
  double slope = 0.0;
  /// Hermitian-symmetrize so the physical field is real.
  bool real = true;
  /// Leray-project (three components only).
  bool solenoidal = false;
};

/// Complex Gaussian coefficients on the masked lattice. The zero mode and
/// every Nyquist-touching mode are always zero.
SpectralField random_field(const GridSpec& grid, const RandomFieldSpec& spec,
                           std::mt19937_64& engine);
/// Draw for trial `index` of a run seeded with `seed` (order independent).
SpectralField random_field(const GridSpec& grid, const RandomFieldSpec& spec, std::uint64_t seed,
                           std::uint64_t index);

/// Engine for trial `index` under `seed`: mt19937_64 seeded by splitmix64(seed ^ index).
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index);

/// Coefficient a at ξ in component `component` (physically (2π)^{-d/2}·a·e^{ix·ξ});
/// for real fields also conj(a) at -ξ.
SpectralField single_mode(const GridSpec& grid, const Freq& xi, cplx amplitude, int components = 1,
                          int component = 0, bool real = true);

}  // namespace fbl
