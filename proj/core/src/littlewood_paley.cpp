#include "fbl/littlewood_paley.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fbl/errors.hpp"
#include "fbl/spectral.hpp"

namespace fbl {
namespace {

constexpr double kInner = 3.0 / 4.0;
constexpr double kOuter = 4.0 / 3.0;

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

SpectralField weighted(const SpectralField& f, const std::vector<DyadicPartition::Entry>& entries) {
  SpectralField out(f.grid(), f.components());
  for (int c = 0; c < f.components(); ++c) {
    auto src = f.component(c);
    auto dst = out.component(c);
    for (const auto& e : entries) dst[e.index] = e.weight * src[e.index];
  }
  return out;
}

}  // namespace

double smoothstep(int order, double x) noexcept {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  if (x > 0.5) return 1.0 - smoothstep(order, 1.0 - x);
  double acc = 0.0;
  double power = 1.0;
  for (int k = 0; k <= order; ++k) {
    acc += binomial(order + k, k) * binomial(2 * order + 1, order - k) * power;
    power *= -x;
  }
  return acc * std::pow(x, order + 1);
}

DyadicPartition::DyadicPartition(const GridSpec& grid, int order)
    : grid_(grid), order_(order), j_min_(-1), j_max_(0) {
  if (order < 3) throw DomainError("smoothstep order must be at least 3");
  if (grid.n() < 16) throw DomainError("grid too small for two dyadic shells (need n >= 16)");
  const auto& table = lattice(grid);
  const double rmax = *std::max_element(table.radius.begin(), table.radius.end());
  while (std::ldexp(kInner, j_max_ + 1) < rmax) ++j_max_;

  for (int j = j_min_; j <= j_max_; ++j) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < table.radius.size(); ++i) {
      const double w = phi(std::ldexp(table.radius[i], -j));
      if (w != 0.0) entries.push_back({i, w});
    }
    blocks_.push_back(std::move(entries));
  }
  for (int j = j_min_ - 1; j <= j_max_ + 1; ++j) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < table.radius.size(); ++i) {
      const double w = chi(std::ldexp(table.radius[i], -j));
      if (w != 0.0) entries.push_back({i, w});
    }
    cutoffs_.push_back(std::move(entries));
  }
}

double DyadicPartition::chi(double r) const noexcept {
  if (r <= kInner) return 1.0;
  if (r >= kOuter) return 0.0;
  return 1.0 - smoothstep(order_, (r - kInner) / (kOuter - kInner));
}

double DyadicPartition::phi(double r) const noexcept { return chi(0.5 * r) - chi(r); }

const std::vector<DyadicPartition::Entry>& DyadicPartition::block_support(int j) const {
  if (j < j_min_ || j > j_max_)
    throw DomainError("dyadic block index " + std::to_string(j) + " outside [" +
                      std::to_string(j_min_) + ", " + std::to_string(j_max_) + "]");
  return blocks_[static_cast<std::size_t>(j - j_min_)];
}

const std::vector<DyadicPartition::Entry>& DyadicPartition::cutoff_support(int j) const {
  if (j < j_min_ - 1 || j > j_max_ + 1)
    throw DomainError("low-frequency cutoff index " + std::to_string(j) + " outside [" +
                      std::to_string(j_min_ - 1) + ", " + std::to_string(j_max_ + 1) + "]");
  return cutoffs_[static_cast<std::size_t>(j - j_min_ + 1)];
}

double DyadicPartition::covered_low() const noexcept { return std::ldexp(kOuter, j_min_); }
double DyadicPartition::covered_high() const noexcept { return std::ldexp(kInner, j_max_ + 1); }

DyadicPartition build_partition(const GridSpec& grid, int order) {
  return DyadicPartition(grid, order);
}

SpectralField dyadic_block(const SpectralField& f, int j, const DyadicPartition& part) {
  if (f.grid() != part.grid()) throw DomainError("field and partition use different grids");
  return weighted(f, part.block_support(j));
}

SpectralField low_freq_cutoff(const SpectralField& f, int j, const DyadicPartition& part) {
  if (f.grid() != part.grid()) throw DomainError("field and partition use different grids");
  return weighted(f, part.cutoff_support(j));
}

SpectralField DyadicDecomposition::reconstruct() const {
  SpectralField out(source.grid(), source.components());
  for (const auto& [j, block] : blocks) out += block;
  return out;
}

DyadicDecomposition decompose(const SpectralField& f, const DyadicPartition& part) {
  DyadicDecomposition out{f, {}};
  for (int j = part.j_min(); j <= part.j_max(); ++j) out.blocks.emplace(j, dyadic_block(f, j, part));
  return out;
}

SpectralField Paraproduct::sum() const { return t_uv + t_vu + remainder; }

Paraproduct paraproduct_split(const SpectralField& u, const SpectralField& v,
                              const DyadicPartition& part) {
  const auto du = decompose(u, part);
  const auto dv = decompose(v, part);
  const int comps = std::max(u.components(), v.components());
  Paraproduct out{SpectralField(u.grid(), comps), SpectralField(u.grid(), comps),
                  SpectralField(u.grid(), comps)};
  for (int j = part.j_min(); j <= part.j_max(); ++j) {
    const auto& dju = du.blocks.at(j);
    const auto& djv = dv.blocks.at(j);
    out.t_uv += multiply(low_freq_cutoff(u, j - 1, part), djv);
    out.t_vu += multiply(low_freq_cutoff(v, j - 1, part), dju);
    SpectralField near = djv;
    if (j > part.j_min()) near += dv.blocks.at(j - 1);
    if (j < part.j_max()) near += dv.blocks.at(j + 1);
    out.remainder += multiply(dju, near);
  }
  return out;
}

}  // namespace fbl
