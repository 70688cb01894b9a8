#pragma once

#include <complex>
#include <vector>

namespace phin {

/// Dyadic atom index: level j, translation k >= 0.
struct HaarIndex {
  int j;
  long k;
  HaarIndex(int j, long k);
  /// Inner edge k/2^j of the right half-support.
  double inner() const noexcept;
  /// Outer edge (k+1)/2^j of the right half-support.
  double outer() const noexcept;
};

/// Coefficients of sum_k even[k] phi+_{j,k} + odd[k] psi_{j,k} at level j.
class HaarCoeffs {
 public:
  using Vec = std::vector<std::complex<double>>;

  HaarCoeffs(int j, Vec even, Vec odd);
  /// All-zero coefficients with kmax + 1 entries.
  static HaarCoeffs zeros(int j, long kmax);

  int j() const noexcept { return j_; }
  long kmax() const noexcept { return static_cast<long>(even_.size()) - 1; }
  std::size_t size() const noexcept { return even_.size(); }
  const Vec& even() const noexcept { return even_; }
  const Vec& odd() const noexcept { return odd_; }

  /// Squared L2 norm of the represented function: (2^-j / 2) sum |even|^2 + |odd|^2.
  double norm_sq() const noexcept;
  bool even_only() const noexcept;
  bool odd_only() const noexcept;

 private:
  int j_;
  Vec even_;
  Vec odd_;
};

}  // namespace phin
