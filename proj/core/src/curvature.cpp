#include "isotherm/curvature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace isotherm {

CurvatureSpectrum principal_curvatures(const ModelSpace& space,
                                       const ImplicitDomain& domain,
                                       const Vec& p) {
  const int n = space.dim;
  const double h =
      space.flat() ? 1e-4 : 1e-4 * space.radius();

  auto dist = [&](const Vec& x) { return domain.signed_boundary_distance(x); };

  // Gradient and Hessian of the signed distance by central differences.
  Vec grad;
  for (int i = 0; i < n; ++i) {
    Vec e;
    e[i] = h;
    grad[i] = (dist(p + e) - dist(p - e)) / (2.0 * h);
  }
  const double grad_norm = norm(grad);
  if (grad_norm < 1e-3) {
    throw SingularityError(
        "principal_curvatures: degenerate distance gradient (surface not C2 "
        "here?)");
  }

  Eigen::Matrix3d hess = Eigen::Matrix3d::Zero();
  const double d0 = dist(p);
  for (int i = 0; i < n; ++i) {
    Vec ei;
    ei[i] = h;
    hess(i, i) = (dist(p + ei) - 2.0 * d0 + dist(p - ei)) / (h * h);
    for (int j = i + 1; j < n; ++j) {
      Vec ej;
      ej[j] = h;
      const double v = (dist(p + ei + ej) - dist(p + ei - ej) -
                        dist(p - ei + ej) + dist(p - ei - ej)) /
                       (4.0 * h * h);
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }

  // Covariant correction: Hess_ij -= dF_q Gamma^q_ij.
  const ChristoffelSymbols gamma = christoffel_symbols(space, p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double corr = 0.0;
      for (int q = 0; q < n; ++q) corr += grad[q] * gamma(q, i, j);
      hess(i, j) -= corr;
    }
  }

  // Shape operator as an endomorphism: -g^{-1} Hess = -e^{-2 phi} Hess.
  const double factor = conformal_factor(space, p);
  Eigen::Matrix3d shape = -hess / (factor * factor);

  const Eigen::Vector3d nu =
      Eigen::Vector3d(grad.x, grad.y, grad.z) / grad_norm;

  CurvatureSpectrum spectrum;
  spectrum.point = p;
  if (n == 2) {
    // Single tangent direction, orthogonal to the normal (conformal metrics
    // preserve coordinate angles).
    const Eigen::Vector3d t(-nu[1], nu[0], 0.0);
    spectrum.values.push_back(t.dot(shape * t));
    return spectrum;
  }

  // Deflate the normal eigendirection and keep the two tangent eigenvalues.
  Eigen::Matrix3d proj = Eigen::Matrix3d::Identity() - nu * nu.transpose();
  Eigen::Matrix3d reduced = proj * shape * proj;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(reduced);
  // The eigenvector most aligned with nu carries the deflated ~0 eigenvalue.
  int drop = 0;
  double best = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double align = std::abs(eig.eigenvectors().col(i).dot(nu));
    if (align > best) {
      best = align;
      drop = i;
    }
  }
  for (int i = 0; i < 3; ++i) {
    if (i != drop) spectrum.values.push_back(eig.eigenvalues()[i]);
  }
  std::sort(spectrum.values.begin(), spectrum.values.end(),
            std::greater<double>());
  return spectrum;
}

}  // namespace isotherm
