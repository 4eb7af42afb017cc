#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "movsig/cvec.hpp"

namespace movsig {

/// Unit-norm transmit precoder.
struct Precoder {
  CVec weights;

  /// Throws std::invalid_argument unless ||w|| = 1 within 1e-9.
  explicit Precoder(CVec w);
};

/// Diagonal unit-modulus reflection matrix of an N-element surface,
/// stored as the per-element phase vector.
struct SurfaceMatrix {
  std::vector<double> phases_rad;

  explicit SurfaceMatrix(std::vector<double> phases);

  /// Reflection coefficient e^{j theta_n} of element n (0-based).
  /// Phases 0 and pi map to exactly +1 and -1.
  std::complex<double> reflection(std::size_t n) const;

  std::size_t size() const { return phases_rad.size(); }
};

/// w = 1/sqrt(N): the fixed power-divider precoder used with movable signals.
Precoder uniform_precoder(int n_elements);

/// Ideal equal gain transmission: [w]_n = e^{-j arg(h_n)} / sqrt(N).
/// Throws "undefined phase" if any entry of h is zero.
Precoder egt_ideal(const CVec& h);

/// One-bit equal gain transmission: [w]_n = sign(Re(h_n)) / sqrt(N),
/// with sign(0) mapped to +1 so the precoder entry is never zero.
Precoder egt_one_bit(const CVec& h);

/// Global maximizer of |h w|^2 over w in {+-1/sqrt(N)}^N.
/// A sign pattern and its negation give the same power, so the search is
/// restricted to patterns with a leading +; ties resolve to the
/// lexicographically smallest pattern. Guarded at N <= 20.
Precoder egt_exhaustive(const CVec& h);

/// Fixed surface with all elements short-circuited: Theta = -I (phases pi).
SurfaceMatrix fis_matrix(int n_elements);

/// Continuous-phase surface maximizing the cascaded received power:
/// theta_n = -arg(hR_n hT_n) + arg(-hR hT). Throws "undefined phase" if
/// hR hT = 0 or any per-element product is zero.
SurfaceMatrix ris_optimal(const CVec& h_rx, const CVec& h_tx);

/// One-bit surface: [Theta]_nn = sign(Re(hR_n hT_n)) * sign(Re(-hR hT)),
/// with sign(0) mapped to +1. Phases are exactly 0 or pi.
SurfaceMatrix ris_one_bit(const CVec& h_rx, const CVec& h_tx);

/// Global maximizer over per-element phases in {0, pi}^N, lexicographic
/// tie-break (0 before pi). Guarded at N <= 20.
SurfaceMatrix ris_one_bit_exhaustive(const CVec& h_rx, const CVec& h_tx);

}  // namespace movsig
