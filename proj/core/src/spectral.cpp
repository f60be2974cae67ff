#include "fbl/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"

namespace fbl {
namespace {

constexpr double kMeanTolerance = 1e-13;

bool has_mean(const SpectralField& g) {
  const double scale = std::max(1.0, g.max_abs());
  for (const auto& z : zero_mode(g))
    if (std::abs(z) > kMeanTolerance * scale) return true;
  return false;
}

}  // namespace

SpectralField forward_transform(const PhysicalField& f) {
  const auto& grid = f.grid();
  const double scale = std::pow(kTwoPi, -0.5 * grid.dims()) * grid.cell_volume();
  std::vector<cplx> data(f.data().begin(), f.data().end());
  SpectralField out(grid, f.components(), std::move(data));
  for (int c = 0; c < f.components(); ++c) {
    auto comp = out.component(c);
    detail::fft_inplace(comp, grid.n(), grid.dims(), -1);
    for (auto& v : comp) v *= scale;
  }
  return out;
}

PhysicalField inverse_transform(const SpectralField& g) {
  const auto& grid = g.grid();
  const double scale = std::pow(kTwoPi, -0.5 * grid.dims());
  std::vector<cplx> data(g.data().begin(), g.data().end());
  PhysicalField out(grid, g.components(), std::move(data));
  for (int c = 0; c < g.components(); ++c) {
    auto comp = out.component(c);
    detail::fft_inplace(comp, grid.n(), grid.dims(), +1);
    for (auto& v : comp) v *= scale;
  }
  return out;
}

std::vector<cplx> zero_mode(const SpectralField& g) {
  std::vector<cplx> out;
  for (int c = 0; c < g.components(); ++c) out.push_back(g.at(c, 0));
  return out;
}

std::vector<cplx> remove_mean(SpectralField& g) {
  auto removed = zero_mode(g);
  for (int c = 0; c < g.components(); ++c) g.at(c, 0) = 0.0;
  return removed;
}

bool Multiplier::singular() const noexcept {
  switch (kind) {
    case Kind::riesz:
    case Kind::inverse_laplacian:
      return true;
    case Kind::fractional:
      return order < 0.0;
    default:
      return false;
  }
}

bool Multiplier::zeroes_nyquist() const noexcept {
  return kind == Kind::derivative || kind == Kind::riesz;
}

cplx Multiplier::symbol(const Freq& xi, double radius2) const noexcept {
  switch (kind) {
    case Kind::derivative: {
      cplx s = 1.0;
      for (int d = 0; d < 3; ++d)
        for (int k = 0; k < alpha[d]; ++k) s *= cplx(0.0, xi[d]);
      return s;
    }
    case Kind::riesz:
      if (radius2 == 0.0) return 0.0;
      return cplx(0.0, -xi[axis] / std::sqrt(radius2));
    case Kind::inverse_laplacian:
      return radius2 == 0.0 ? 0.0 : 1.0 / radius2;
    case Kind::heat:
      return std::exp(-time * radius2);
    case Kind::fractional:
      if (radius2 == 0.0) return order == 0.0 ? 1.0 : 0.0;
      return std::pow(radius2, 0.5 * order);
  }
  return 0.0;
}

SpectralField apply_multiplier(const SpectralField& g, const Multiplier& m, MeanPolicy policy) {
  if (m.singular() && policy == MeanPolicy::reject && has_mean(g))
    throw DomainError("singular multiplier applied to a field with nonzero mean");
  const auto& table = lattice(g.grid());
  SpectralField out = g;
  const bool nyq = m.zeroes_nyquist();
  for (std::size_t i = 0; i < g.points(); ++i) {
    const cplx s = (nyq && table.nyquist[i]) ? cplx{} : m.symbol(table.freq[i], table.radius2[i]);
    for (int c = 0; c < g.components(); ++c) out.at(c, i) *= s;
  }
  return out;
}

SpectralField leray_project(const SpectralField& u) {
  if (u.components() != 3) throw DomainError("Leray projection needs a 3-component field");
  if (has_mean(u)) throw DomainError("Leray projection needs a zero-mean field");
  const auto& table = lattice(u.grid());
  SpectralField out(u.grid(), 3);
  for (std::size_t i = 0; i < u.points(); ++i) {
    const double r2 = table.radius2[i];
    if (r2 == 0.0) continue;
    const auto& xi = table.freq[i];
    const cplx dot = double(xi[0]) * u.at(0, i) + double(xi[1]) * u.at(1, i) +
                     double(xi[2]) * u.at(2, i);
    for (int c = 0; c < 3; ++c) out.at(c, i) = u.at(c, i) - (double(xi[c]) / r2) * dot;
  }
  return out;
}

SpectralField volume_potential(const SpectralField& u, MeanPolicy policy) {
  if (policy == MeanPolicy::reject && has_mean(u))
    throw DomainError("Poisson equation on the torus needs a zero-mean source");
  return apply_multiplier(u, Multiplier::inverse_laplacian(), MeanPolicy::remove);
}

SpectralField divergence(const SpectralField& u) {
  const int dims = u.grid().dims();
  if (u.components() != dims) throw DomainError("divergence needs one component per axis");
  const auto& table = lattice(u.grid());
  SpectralField out(u.grid(), 1);
  for (std::size_t i = 0; i < u.points(); ++i) {
    if (table.nyquist[i]) continue;
    cplx acc = 0.0;
    for (int k = 0; k < dims; ++k) acc += cplx(0.0, table.freq[i][k]) * u.at(k, i);
    out.at(0, i) = acc;
  }
  return out;
}

SpectralField gradient(const SpectralField& u) {
  if (u.components() != 1) throw DomainError("gradient needs a scalar field");
  const int dims = u.grid().dims();
  const auto& table = lattice(u.grid());
  SpectralField out(u.grid(), dims);
  for (std::size_t i = 0; i < u.points(); ++i) {
    if (table.nyquist[i]) continue;
    for (int k = 0; k < dims; ++k) out.at(k, i) = cplx(0.0, table.freq[i][k]) * u.at(0, i);
  }
  return out;
}

double divergence_defect(const SpectralField& u) {
  const auto& table = lattice(u.grid());
  const double size = std::sqrt(u.sum_squares());
  if (size == 0.0) return 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < u.points(); ++i) {
    cplx dot = 0.0;
    for (int k = 0; k < u.components(); ++k) dot += double(table.freq[i][k]) * u.at(k, i);
    // normalize by |ξ| so the defect is scale free
    if (table.radius2[i] > 0.0) worst = std::max(worst, std::abs(dot) / table.radius[i]);
  }
  return worst / size;
}

double hermitian_defect(const SpectralField& g) {
  const auto& grid = g.grid();
  const auto& table = lattice(grid);
  const double scale = g.max_abs();
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (int c = 0; c < g.components(); ++c) {
    for (std::size_t i = 0; i < g.points(); ++i) {
      const auto& xi = table.freq[i];
      const std::size_t j = grid.flat_index({-xi[0], -xi[1], -xi[2]});
      worst = std::max(worst, std::abs(g.at(c, j) - std::conj(g.at(c, i))));
    }
  }
  return worst / scale;
}

void make_hermitian(SpectralField& g) {
  const auto& grid = g.grid();
  const auto& table = lattice(grid);
  SpectralField src = g;
  for (int c = 0; c < g.components(); ++c) {
    for (std::size_t i = 0; i < g.points(); ++i) {
      const auto& xi = table.freq[i];
      const std::size_t j = grid.flat_index({-xi[0], -xi[1], -xi[2]});
      g.at(c, i) = 0.5 * (src.at(c, i) + std::conj(src.at(c, j)));
    }
  }
}

void clear_nyquist(SpectralField& g) {
  const auto& table = lattice(g.grid());
  for (std::size_t i = 0; i < g.points(); ++i)
    if (table.nyquist[i])
      for (int c = 0; c < g.components(); ++c) g.at(c, i) = 0.0;
}

void truncate_two_thirds(SpectralField& g) {
  const auto& table = lattice(g.grid());
  const int cut = g.grid().n() / 3;
  for (std::size_t i = 0; i < g.points(); ++i) {
    const auto& xi = table.freq[i];
    if (std::abs(xi[0]) > cut || std::abs(xi[1]) > cut || std::abs(xi[2]) > cut)
      for (int c = 0; c < g.components(); ++c) g.at(c, i) = 0.0;
  }
}

PaddedProduct::PaddedProduct(const GridSpec& grid)
    : grid_(grid), m_(padded_size(grid.n())), embed_(grid.size()), keep_(grid.size()) {
  const auto& table = lattice(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& xi = table.freq[i];
    std::size_t flat = 0;
    for (int d = 0; d < grid.dims(); ++d)
      flat = flat * m_ + static_cast<std::size_t>(((xi[d] % m_) + m_) % m_);
    embed_[i] = flat;
    keep_[i] = table.nyquist[i] ? 0 : 1;
  }
}

std::vector<cplx> PaddedProduct::evaluate(std::span<const cplx> coefficients) const {
  std::size_t padded = 1;
  for (int d = 0; d < grid_.dims(); ++d) padded *= static_cast<std::size_t>(m_);
  std::vector<cplx> samples(padded, cplx{});
  for (std::size_t i = 0; i < coefficients.size(); ++i) samples[embed_[i]] = coefficients[i];
  detail::fft_inplace(samples, m_, grid_.dims(), +1);
  const double scale = std::pow(kTwoPi, -0.5 * grid_.dims());
  for (auto& v : samples) v *= scale;
  return samples;
}

std::vector<cplx> PaddedProduct::project(std::vector<cplx> samples) const {
  detail::fft_inplace(samples, m_, grid_.dims(), -1);
  const double scale = std::pow(kTwoPi, -0.5 * grid_.dims()) * std::pow(kTwoPi / m_, grid_.dims());
  std::vector<cplx> out(grid_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = keep_[i] ? samples[embed_[i]] * scale : cplx{};
  return out;
}

SpectralField multiply(const SpectralField& a, const SpectralField& b) {
  if (a.grid() != b.grid()) throw DomainError("product of fields on different grids");
  const bool broadcast_a = a.components() == 1 && b.components() > 1;
  const bool broadcast_b = b.components() == 1 && a.components() > 1;
  if (a.components() != b.components() && !broadcast_a && !broadcast_b)
    throw DomainError("product needs equal component counts or a scalar factor");
  const int comps = std::max(a.components(), b.components());
  PaddedProduct engine(a.grid());
  SpectralField out(a.grid(), comps);
  std::vector<cplx> sa, sb;
  for (int c = 0; c < comps; ++c) {
    if (c == 0 || !broadcast_a) sa = engine.evaluate(a.component(broadcast_a ? 0 : c));
    if (c == 0 || !broadcast_b) sb = engine.evaluate(b.component(broadcast_b ? 0 : c));
    std::vector<cplx> prod(sa.size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = sa[i] * sb[i];
    auto coeffs = engine.project(std::move(prod));
    std::copy(coeffs.begin(), coeffs.end(), out.component(c).begin());
  }
  return out;
}

std::vector<double> radial_spectrum(const SpectralField& g) {
  const auto& table = lattice(g.grid());
  const double rmax = *std::max_element(table.radius.begin(), table.radius.end());
  std::vector<double> spectrum(static_cast<std::size_t>(std::lround(rmax)) + 1, 0.0);
  for (std::size_t i = 0; i < g.points(); ++i) {
    const auto bin = static_cast<std::size_t>(std::lround(table.radius[i]));
    for (int c = 0; c < g.components(); ++c) spectrum[bin] += std::norm(g.at(c, i));
  }
  return spectrum;
}

double physical_energy(const PhysicalField& f) { return f.sum_squares() * f.grid().cell_volume(); }

double spectral_energy(const SpectralField& g) { return g.sum_squares(); }

}  // namespace fbl
