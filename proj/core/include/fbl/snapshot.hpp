#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "fbl/field.hpp"

namespace fbl {

/// Decoded contents of a binary field snapshot.
///
/// Layout (little endian, no padding): "FBLB", version u32, dims u8, n u32,
/// components u8, side u8, then (re, im) float64 pairs, component-major, each
/// component in row-major FFT order.
struct Snapshot {
  GridSpec grid{8, 3};
  int components = 1;
  Side side = Side::spectral;
  std::vector<cplx> data;

  SpectralField spectral() const;
  PhysicalField physical() const;
};

inline constexpr std::uint32_t kSnapshotVersion = 1;

std::string encode_snapshot(const SpectralField& f);
std::string encode_snapshot(const PhysicalField& f);
Snapshot decode_snapshot(const std::string& bytes);

void save_snapshot(const std::filesystem::path& path, const SpectralField& f);
void save_snapshot(const std::filesystem::path& path, const PhysicalField& f);
Snapshot load_snapshot(const std::filesystem::path& path);

/// Writes `contents` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);
std::string read_file(const std::filesystem::path& path);

/// "k,energy" rows of the shell-binned spectrum, with a header line.
std::string radial_spectrum_csv(const SpectralField& f);

}  // namespace fbl
