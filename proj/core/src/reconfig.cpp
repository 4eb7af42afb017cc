#include "movsig/reconfig.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "movsig/units.hpp"

namespace movsig {

namespace {

constexpr int kOracleMaxElements = 20;

// sign with sign(0) -> +1, so quantized entries are never zero.
double sign01(double x) { return x < 0.0 ? -1.0 : 1.0; }

void check_oracle_size(std::size_t n) {
  if (n > kOracleMaxElements) throw std::invalid_argument("oracle limit exceeded");
}

// Sign pattern for mask m, most significant bit first so that ascending m
// enumerates patterns in lexicographic order (+1 before -1).
double mask_sign(std::uint32_t mask, std::size_t n_total, std::size_t index) {
  const std::uint32_t bit = (mask >> (n_total - 1 - index)) & 1u;
  return bit ? -1.0 : 1.0;
}

}  // namespace

Precoder::Precoder(CVec w) : weights(std::move(w)) {
  if (weights.empty()) throw std::invalid_argument("precoder must be non-empty");
  if (std::abs(l2_norm(weights) - 1.0) > 1e-9)
    throw std::invalid_argument("precoder must have unit norm");
}

SurfaceMatrix::SurfaceMatrix(std::vector<double> phases) : phases_rad(std::move(phases)) {
  if (phases_rad.empty()) throw std::invalid_argument("surface must be non-empty");
}

std::complex<double> SurfaceMatrix::reflection(std::size_t n) const {
  const double theta = phases_rad[n];
  if (theta == 0.0) return {1.0, 0.0};
  if (theta == kPi) return {-1.0, 0.0};  // one-bit configurations are exactly real
  return std::polar(1.0, theta);
}

Precoder uniform_precoder(int n_elements) {
  if (n_elements < 1) throw std::invalid_argument("element count must be at least 1");
  const double value = 1.0 / std::sqrt(static_cast<double>(n_elements));
  return Precoder(CVec(static_cast<std::size_t>(n_elements), {value, 0.0}));
}

Precoder egt_ideal(const CVec& h) {
  if (h.empty()) throw std::invalid_argument("channel must be non-empty");
  const double scale = 1.0 / std::sqrt(static_cast<double>(h.size()));
  CVec w(h.size());
  for (std::size_t n = 0; n < h.size(); ++n) {
    if (h[n] == std::complex<double>{0.0, 0.0})
      throw std::invalid_argument("undefined phase");
    w[n] = std::polar(scale, -std::arg(h[n]));
  }
  return Precoder(std::move(w));
}

Precoder egt_one_bit(const CVec& h) {
  if (h.empty()) throw std::invalid_argument("channel must be non-empty");
  const double scale = 1.0 / std::sqrt(static_cast<double>(h.size()));
  CVec w(h.size());
  for (std::size_t n = 0; n < h.size(); ++n) {
    w[n] = {sign01(h[n].real()) * scale, 0.0};
  }
  return Precoder(std::move(w));
}

Precoder egt_exhaustive(const CVec& h) {
  if (h.empty()) throw std::invalid_argument("channel must be non-empty");
  check_oracle_size(h.size());
  const std::size_t n = h.size();
  // Global negation leaves |h w|^2 unchanged, so only patterns with a
  // leading + are enumerated; the first strict improvement wins, which
  // keeps the lexicographically smallest maximizer. Candidates are scored
  // with the same arithmetic as dot(h, w) on the scaled weights, so the
  // returned precoder never measures below any other pattern, the
  // closed-form one included.
  const std::uint32_t candidates = n == 1 ? 1u : (1u << (n - 1));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  double best_power = -1.0;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < candidates; ++mask) {
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double weight = mask_sign(mask, n, i) * scale;
      sum += std::complex<double>{h[i].real() * weight, h[i].imag() * weight};
    }
    const double power = std::norm(sum);
    if (power > best_power) {
      best_power = power;
      best_mask = mask;
    }
  }
  CVec w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = {mask_sign(best_mask, n, i) * scale, 0.0};
  return Precoder(std::move(w));
}

SurfaceMatrix fis_matrix(int n_elements) {
  if (n_elements < 1) throw std::invalid_argument("element count must be at least 1");
  return SurfaceMatrix(std::vector<double>(static_cast<std::size_t>(n_elements), kPi));
}

SurfaceMatrix ris_optimal(const CVec& h_rx, const CVec& h_tx) {
  if (h_rx.size() != h_tx.size()) throw std::invalid_argument("length mismatch");
  const std::complex<double> through = dot(h_rx, h_tx);
  if (through == std::complex<double>{0.0, 0.0})
    throw std::invalid_argument("undefined phase");
  const double target_phase = std::arg(-through);
  std::vector<double> phases(h_rx.size());
  for (std::size_t n = 0; n < h_rx.size(); ++n) {
    const std::complex<double> product = h_rx[n] * h_tx[n];
    if (product == std::complex<double>{0.0, 0.0})
      throw std::invalid_argument("undefined phase");
    phases[n] = -std::arg(product) + target_phase;
  }
  return SurfaceMatrix(std::move(phases));
}

SurfaceMatrix ris_one_bit(const CVec& h_rx, const CVec& h_tx) {
  if (h_rx.size() != h_tx.size()) throw std::invalid_argument("length mismatch");
  if (h_rx.empty()) throw std::invalid_argument("channel must be non-empty");
  const double structural_sign = sign01((-dot(h_rx, h_tx)).real());
  std::vector<double> phases(h_rx.size());
  for (std::size_t n = 0; n < h_rx.size(); ++n) {
    const double element_sign = sign01((h_rx[n] * h_tx[n]).real());
    phases[n] = element_sign * structural_sign > 0.0 ? 0.0 : kPi;
  }
  return SurfaceMatrix(std::move(phases));
}

SurfaceMatrix ris_one_bit_exhaustive(const CVec& h_rx, const CVec& h_tx) {
  if (h_rx.size() != h_tx.size()) throw std::invalid_argument("length mismatch");
  if (h_rx.empty()) throw std::invalid_argument("channel must be non-empty");
  check_oracle_size(h_rx.size());
  const std::size_t n = h_rx.size();
  CVec products(n);
  std::complex<double> structural{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    products[i] = h_rx[i] * h_tx[i];
    structural += products[i];
  }
  // The structural term breaks the global-negation symmetry, so all 2^N
  // configurations are enumerated; 0-phase sorts before pi.
  const std::uint64_t candidates = 1ull << n;
  double best_power = -1.0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    std::complex<double> reflected{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const double sign = mask_sign(static_cast<std::uint32_t>(mask), n, i);
      reflected += sign * products[i];
    }
    const double power = std::norm(reflected - structural);
    if (power > best_power) {
      best_power = power;
      best_mask = mask;
    }
  }
  std::vector<double> phases(n);
  for (std::size_t i = 0; i < n; ++i) {
    phases[i] = mask_sign(static_cast<std::uint32_t>(best_mask), n, i) > 0.0 ? 0.0 : kPi;
  }
  return SurfaceMatrix(std::move(phases));
}

}  // namespace movsig
