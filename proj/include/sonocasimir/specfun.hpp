#pragma once

// Half-integer-order Bessel functions J_{l+1/2}, N_{l+1/2} and the
// pseudo-Wronskian determinants built from them.

#include <vector>

namespace sono {

/// Angular momentum l >= 1 of a radiating partial wave; order nu = l + 1/2.
class ModeIndex {
 public:
  explicit ModeIndex(int l);

  int l() const noexcept { return l_; }
  double nu() const noexcept { return l_ + 0.5; }

 private:
  int l_;
};

inline constexpr int kMaxOrder = 2000;
inline constexpr double kMaxArgument = 1.0e4;

// Point evaluations. The integer overloads accept any order l >= 0 (so that
// J_{1/2} and J_{l-1/2} are reachable); the range is l <= kMaxOrder,
// 0 < z <= kMaxArgument.
double bessel_j_half(int l, double z);
double bessel_n_half(int l, double z);
inline double bessel_j_half(ModeIndex m, double z) { return bessel_j_half(m.l(), z); }
inline double bessel_n_half(ModeIndex m, double z) { return bessel_n_half(m.l(), z); }

/// J_{l+1/2}(z) for l = 0..l_max. Downward (Miller) recurrence when l_max > z,
/// upward otherwise. Entries that underflow are returned as 0. No range limit
/// on l_max beyond memory; z must be positive and finite.
std::vector<double> bessel_j_half_sequence(int l_max, double z);

/// N_{l+1/2}(z) for l = 0..l_max by upward recurrence. Overflowed entries are
/// -infinity.
std::vector<double> bessel_n_half_sequence(int l_max, double z);

/// Determinant | J(x)  J(y) ; x J'(x)  y J'(y) |, derivatives with respect to
/// the full argument. Antisymmetric in (x, y).
double pseudo_wronskian(ModeIndex m, double x, double y);

/// 2 nu J_nu(x) J_{nu-1}(x) - x [J_nu(x)^2 + J_{nu-1}(x)^2].
///
/// With the determinant convention above this is the limit of
/// pseudo_wronskian(m, x, y) / (y - x) as y -> x.
double pseudo_wronskian_diagonal(ModeIndex m, double x);

/// Large-order form (1/sqrt(2 pi nu)) (e z / 2 nu)^nu. Valid only for
/// nu > e z / 2; there it bounds |J_nu(z)| from above. Used for truncation
/// tail estimates only.
double bessel_j_large_order(ModeIndex m, double z);
double bessel_j_large_order(double nu, double z);

/// Same expressions evaluated from precomputed J_{l+1/2} sequences
/// (j[l] = J_{l+1/2}). Used by the summation kernels.
namespace detail {
inline double pseudo_wronskian_from(int l, double x, const std::vector<double>& jx, double y,
                                    const std::vector<double>& jy) {
  return -(jx[l] * y * jy[l + 1] - jy[l] * x * jx[l + 1]);
}
inline double diagonal_from(int l, double x, const std::vector<double>& jx) {
  const double nu = l + 0.5;
  const double a = jx[l];
  const double b = jx[l - 1];
  return 2.0 * nu * a * b - x * (a * a + b * b);
}
}  // namespace detail

}  // namespace sono
