#pragma once

#include <functional>
#include <string>
#include <vector>

#include "isotherm/curvature.hpp"
#include "isotherm/ladder.hpp"

namespace isotherm {

// Integral over the geodesic sphere of radius R about `center` with the
// metric area element: the center is moved to the origin by the canonical
// isometry and the integral becomes the coordinate-sphere quadrature with
// weight generalized_sin(R)^(n-1). Exact for constants:
// c * |S^{n-1}| * generalized_sin(R)^{n-1}.
//
// Planar case: m equispaced angles (trapezoid, spectrally accurate for
// smooth integrands). Three dimensions: Gauss-Legendre in the polar angle
// times a uniform azimuthal grid, about m nodes total.
double sphere_integral(const ModelSpace& space,
                       const std::function<double(const Vec&)>& f,
                       const Vec& center, double R, int m);

// Field integrand phi(x) * field(x); CoverageError if the sphere leaves the
// field's data.
double sphere_integral(const GridField& field,
                       const std::function<double(const Vec&)>& phi,
                       const Vec& center, double R, int m);

// The scaled sphere integrals s^{(n-1)/4} int phi W(s,.) dA along a ladder.
// Entries violating the resolution rule sqrt(s) h <= 0.5 (or clamped) are
// excluded, with a note in `warnings`.
struct ScaledSphereIntegrals {
  std::vector<double> s_values;
  std::vector<double> values;
  std::vector<std::string> warnings;
};

ScaledSphereIntegrals scaled_sphere_integrals(
    const SLadder& ladder, const std::function<double(const Vec&)>& phi,
    const Vec& center, double R, int m);

// Closed form of the tangency asymptotic: for contact points p_1..p_l of the
// sphere of radius R with the domain boundary,
//   (2 pi)^{(n-1)/2} sum_m phi(p_m)
//       [ (1/cos_k(R)^{n-1}) prod_j (tau_k(R) - lambda_j(p_m)) ]^{-1/2}.
// Requires every lambda_j < sphere_curvature(R); HypothesisError otherwise.
double tangency_asymptotic_value(
    const ModelSpace& space, double R,
    const std::vector<std::pair<Vec, CurvatureSpectrum>>& contacts,
    const std::function<double(const Vec&)>& phi);

}  // namespace isotherm
