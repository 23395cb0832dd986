#pragma once

#include <iosfwd>
#include <string>

#include "quartic/simulate.hpp"

namespace quartic {

/// Flat binary layout, little-endian host order:
///
///   magic "QLPATHS\0" (8 bytes) | version u32 (=1) | n i64 | T f64 | M u64 |
///   seed u64 | kernel id length u32 | kernel id bytes | M * (N+1) f64 row-major
inline constexpr char kEnsembleMagic[8] = {'Q', 'L', 'P', 'A', 'T', 'H', 'S', '\0'};
inline constexpr std::uint32_t kEnsembleFormatVersion = 1;

void write_ensemble_binary(std::ostream& os, const PathEnsemble& ensemble);
PathEnsemble read_ensemble_binary(std::istream& is);

/// CSV with header "replicate,j,t,value"; floats with 17 significant digits.
void write_ensemble_csv(std::ostream& os, const PathEnsemble& ensemble);

/// 17 significant digits, the round-trip precision for doubles.
std::string format_double(double x);

}  // namespace quartic
