#pragma once

#include <complex>
#include <vector>

namespace movsig {

/// Complex column/row vector used for channels, precoders and steering vectors.
using CVec = std::vector<std::complex<double>>;

/// Unconjugated product sum a·b. Channels are row vectors in this library,
/// so the row-times-column products h·w and h_R·h_T map onto this directly.
std::complex<double> dot(const CVec& a, const CVec& b);

/// Euclidean norm.
double l2_norm(const CVec& v);

}  // namespace movsig
