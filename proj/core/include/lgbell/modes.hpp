#pragma once

#include <complex>
#include <vector>

#include "lgbell/specfun.hpp"

namespace lgbell {

using complex = std::complex<double>;

/// LG/HG index pair (n, m). For LG modes l = n - m is the topological charge.
struct ModeIndex {
  int n = 0;
  int m = 0;

  constexpr int order() const { return n + m; }
  constexpr int orbital_angular_momentum() const { return n - m; }

  friend constexpr bool operator==(ModeIndex, ModeIndex) = default;
};

/// Throws std::invalid_argument unless n, m >= 0 and n + m <= kMaxDegree.
void validate(ModeIndex mode);

/// Beam waist w and reduced wavelength lambdabar, both in length units.
struct ScaleParams {
  double w = 1.0;
  double lambdabar = 1.0;
};

void validate(const ScaleParams& scale);

/// A (position, momentum) pair along one transverse axis.
struct PhasePlanePoint {
  double q = 0.0;
  double p = 0.0;
};

/// Physical (x, p_x) to dimensionless (X, P_X): X = sqrt(2) x / w,
/// P = w p / (sqrt(2) lambdabar).
PhasePlanePoint physical_to_scaled(PhasePlanePoint physical, const ScaleParams& scale);
PhasePlanePoint scaled_to_physical(PhasePlanePoint scaled, const ScaleParams& scale);

/// LG amplitude at the scaled point (X, Y), normalized so that
/// integral |Phi|^2 dX dY = 1. Carries the (-1)^min(n,m) global sign.
complex lg_amplitude(ModeIndex mode, double x, double y);

/// HG amplitude u_{nm} at the scaled point, unit L2 norm in (X, Y).
double hg_amplitude(ModeIndex mode, double x, double y);

/// Field value together with its partial derivatives.
struct FieldJet {
  complex value;
  complex d_x;
  complex d_y;
};

/// Phi_{nm} and its gradient, obtained by differentiating the closed form
/// (dL_p^a/dz = -L_{p-1}^{a+1}). With `with_envelope == false` the common
/// factor exp(-(X^2+Y^2)/2) is left out of all three components, which is
/// what Gauss-Hermite integration against exp(-X^2-Y^2) wants.
FieldJet lg_jet(ModeIndex mode, double x, double y, bool with_envelope = true);

/// One term c_k u_{n+m-k,k} of the LG to HG expansion.
struct SchmidtTerm {
  ModeIndex hg_index;
  complex coefficient;
};

/// Expansion coefficients of Phi_{nm} over HG modes (n+m-k, k), k = 0..n+m.
///
/// c_k = (-i)^k [t^k]((1-t)^n (1+t)^m) sqrt(k!(n+m-k)! / (n! m! 2^{n+m})).
/// The (-i)^k phase is the one for which the sum reproduces lg_amplitude,
/// e.g. Phi_10 proportional to (X + iY); i^k would give (X - iY).
std::vector<SchmidtTerm> schmidt_coefficients(ModeIndex mode);

/// Sum_k c_k u_{n+m-k,k}(X, Y).
complex reconstruct_from_schmidt(ModeIndex mode, double x, double y);
complex reconstruct_from_schmidt(const std::vector<SchmidtTerm>& terms, double x, double y);

}  // namespace lgbell
