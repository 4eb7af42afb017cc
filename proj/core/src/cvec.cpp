#include "movsig/cvec.hpp"

#include <cmath>
#include <stdexcept>

namespace movsig {

std::complex<double> dot(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

double l2_norm(const CVec& v) {
  double sum = 0.0;
  for (const auto& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace movsig
