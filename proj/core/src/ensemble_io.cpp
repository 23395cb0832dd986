#include "quartic/ensemble_io.hpp"

#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "quartic/rng.hpp"

namespace quartic {
namespace {

template <class T>
void put(std::ostream& os, const T& v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& is) {
  T v{};
  if (!is.read(reinterpret_cast<char*>(&v), sizeof(T)))
    throw std::runtime_error("ensemble file truncated in header");
  return v;
}

}  // namespace

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

void write_ensemble_binary(std::ostream& os, const PathEnsemble& ensemble) {
  os.write(kEnsembleMagic, sizeof kEnsembleMagic);
  put(os, kEnsembleFormatVersion);
  put(os, static_cast<std::int64_t>(ensemble.grid().n()));
  put(os, ensemble.grid().horizon());
  put(os, static_cast<std::uint64_t>(ensemble.replicates()));
  put(os, ensemble.seed());
  const std::string& id = ensemble.kernel_id();
  put(os, static_cast<std::uint32_t>(id.size()));
  os.write(id.data(), static_cast<std::streamsize>(id.size()));
  const auto values = ensemble.values();
  os.write(reinterpret_cast<const char*>(values.data()),
           static_cast<std::streamsize>(values.size() * sizeof(double)));
  if (!os) throw std::runtime_error("failed to write ensemble");
}

PathEnsemble read_ensemble_binary(std::istream& is) {
  char magic[8];
  if (!is.read(magic, sizeof magic) || std::memcmp(magic, kEnsembleMagic, sizeof magic) != 0)
    throw std::runtime_error("not an ensemble file (bad magic)");
  const auto version = get<std::uint32_t>(is);
  if (version != kEnsembleFormatVersion)
    throw std::runtime_error("unsupported ensemble format version " + std::to_string(version));
  const auto n = get<std::int64_t>(is);
  const auto horizon = get<double>(is);
  const auto replicates = get<std::uint64_t>(is);
  const auto seed = get<std::uint64_t>(is);
  const auto id_len = get<std::uint32_t>(is);
  std::string id(id_len, '\0');
  if (!is.read(id.data(), id_len)) throw std::runtime_error("ensemble file truncated in kernel id");

  std::vector<std::uint64_t> keys(replicates);
  for (std::uint64_t m = 0; m < replicates; ++m) keys[m] = derive_stream_key(seed, m, StreamRole::Process);
  PathEnsemble ens(Grid(n, horizon), replicates, std::move(id), seed, std::move(keys));
  auto values = ens.mutable_values();
  if (!is.read(reinterpret_cast<char*>(values.data()),
               static_cast<std::streamsize>(values.size() * sizeof(double))))
    throw std::runtime_error("ensemble file truncated in body");
  return ens;
}

void write_ensemble_csv(std::ostream& os, const PathEnsemble& ensemble) {
  os << "replicate,j,t,value\n";
  const Grid& grid = ensemble.grid();
  for (std::size_t m = 0; m < ensemble.replicates(); ++m)
    for (std::size_t j = 0; j < grid.points(); ++j)
      os << m << ',' << j << ',' << format_double(grid.time(j)) << ','
         << format_double(ensemble.at(m, j)) << '\n';
}

}  // namespace quartic
