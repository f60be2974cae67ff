#include "fbl/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "fbl/spectral.hpp"
#include "format.hpp"

namespace fbl {
namespace {

constexpr std::size_t kHeaderBytes = 4 + 4 + 1 + 4 + 1 + 1;

void put_u32(std::string& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) out.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

std::uint64_t get_le(const std::string& in, std::size_t pos, int bytes) {
  std::uint64_t v = 0;
  for (int b = 0; b < bytes; ++b)
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + b])) << (8 * b);
  return v;
}

template <Side S>
std::string encode(const GridField<S>& f) {
  std::string out = "FBLB";
  put_u32(out, kSnapshotVersion);
  out.push_back(static_cast<char>(f.grid().dims()));
  put_u32(out, static_cast<std::uint32_t>(f.grid().n()));
  out.push_back(static_cast<char>(f.components()));
  out.push_back(static_cast<char>(S));
  out.reserve(out.size() + 16 * f.data().size());
  for (const auto& z : f.data()) {
    put_u64(out, std::bit_cast<std::uint64_t>(z.real()));
    put_u64(out, std::bit_cast<std::uint64_t>(z.imag()));
  }
  return out;
}

}  // namespace

SpectralField Snapshot::spectral() const {
  if (side != Side::spectral) return forward_transform(physical());
  return SpectralField(grid, components, data);
}

PhysicalField Snapshot::physical() const {
  if (side != Side::physical) return inverse_transform(spectral());
  return PhysicalField(grid, components, data);
}

std::string encode_snapshot(const SpectralField& f) { return encode(f); }
std::string encode_snapshot(const PhysicalField& f) { return encode(f); }

Snapshot decode_snapshot(const std::string& bytes) {
  if (bytes.size() < kHeaderBytes || bytes.compare(0, 4, "FBLB") != 0)
    throw DomainError("not a field snapshot (bad magic)");
  const auto version = static_cast<std::uint32_t>(get_le(bytes, 4, 4));
  if (version != kSnapshotVersion)
    throw DomainError("unsupported snapshot version " + std::to_string(version));
  const int dims = static_cast<unsigned char>(bytes[8]);
  const int n = static_cast<int>(get_le(bytes, 9, 4));
  const int components = static_cast<unsigned char>(bytes[13]);
  const int side = static_cast<unsigned char>(bytes[14]);
  if (side > 1) throw DomainError("snapshot side byte must be 0 or 1");
  Snapshot snap{GridSpec(n, dims), components, static_cast<Side>(side), {}};
  const std::size_t count = snap.grid.size() * static_cast<std::size_t>(components);
  if (bytes.size() != kHeaderBytes + 16 * count)
    throw DomainError("snapshot payload size does not match its header");
  snap.data.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t pos = kHeaderBytes + 16 * i;
    snap.data[i] = {std::bit_cast<double>(get_le(bytes, pos, 8)),
                    std::bit_cast<double>(get_le(bytes, pos + 8, 8))};
  }
  return snap;
}

void save_snapshot(const std::filesystem::path& path, const SpectralField& f) {
  write_file_atomic(path, encode_snapshot(f));
}

void save_snapshot(const std::filesystem::path& path, const PhysicalField& f) {
  write_file_atomic(path, encode_snapshot(f));
}

Snapshot load_snapshot(const std::filesystem::path& path) { return decode_snapshot(read_file(path)); }

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot move output into place at " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string radial_spectrum_csv(const SpectralField& f) {
  std::string out = "k,energy\n";
  const auto spectrum = radial_spectrum(f);
  for (std::size_t k = 0; k < spectrum.size(); ++k)
    out += std::to_string(k) + "," + detail::format_double(spectrum[k]) + "\n";
  return out;
}

}  // namespace fbl
