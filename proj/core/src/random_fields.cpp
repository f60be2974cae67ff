#include "fbl/random_fields.hpp"

#include <cmath>

#include "fbl/errors.hpp"
#include "fbl/spectral.hpp"
#include "rng.hpp"

namespace fbl {

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t index) {
  return detail::trial_engine(seed, index);
}

SpectralField random_field(const GridSpec& grid, const RandomFieldSpec& spec,
                           std::mt19937_64& engine) {
  if (spec.outer < spec.inner || spec.outer < 1.0)
    throw DomainError("random field support radii must satisfy 1 ≤ outer, inner ≤ outer");
  if (spec.solenoidal && spec.components != 3)
    throw DomainError("solenoidal random fields need three components");
  const auto& table = lattice(grid);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SpectralField out(grid, spec.components);
  // Draw in a fixed order (component, then lattice index) so results do not
  // depend on how the mask is laid out.
  for (int c = 0; c < spec.components; ++c) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double re = gauss(engine);
      const double im = gauss(engine);
      const double r = table.radius[i];
      if (r == 0.0 || table.nyquist[i] || r < spec.inner || r > spec.outer) continue;
      const double amp = spec.slope == 0.0 ? 1.0 : std::pow(r, -spec.slope);
      out.at(c, i) = amp * cplx(re, im);
    }
  }
  if (spec.real) make_hermitian(out);
  if (spec.solenoidal) out = leray_project(out);
  return out;
}

SpectralField random_field(const GridSpec& grid, const RandomFieldSpec& spec, std::uint64_t seed,
                           std::uint64_t index) {
  auto engine = trial_engine(seed, index);
  return random_field(grid, spec, engine);
}

SpectralField single_mode(const GridSpec& grid, const Freq& xi, cplx amplitude, int components,
                          int component, bool real) {
  if (component < 0 || component >= components) throw DomainError("mode component out of range");
  SpectralField out(grid, components);
  const std::size_t i = grid.flat_index(xi);
  if (grid.frequency(i) != xi) throw DomainError("mode frequency is outside the lattice");
  out.at(component, i) += amplitude;
  if (real) {
    const std::size_t j = grid.flat_index({-xi[0], -xi[1], -xi[2]});
    if (j == i) {
      out.at(component, i) = amplitude.real();
    } else {
      out.at(component, j) += std::conj(amplitude);
    }
  }
  return out;
}

}  // namespace fbl
