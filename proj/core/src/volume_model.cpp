#include "vwapgamma/volume_model.hpp"

#include <cmath>
#include <string>

#include "vwapgamma/error.hpp"

namespace vwapgamma {

void validate(const VolumeParams& params) {
  detail::require(params.alpha > 0.0,
                  "volume alpha must be positive, got " + std::to_string(params.alpha));
  detail::require(params.theta > 0.0 && std::isfinite(params.theta),
                  "volume theta must be positive, got " + std::to_string(params.theta));
  detail::require(params.n_buckets >= 1, "volume bucket count must be at least 1");
}

void validate(const AveragingGrid& grid) {
  detail::require(grid.maturity > 0.0 && std::isfinite(grid.maturity),
                  "maturity must be positive, got " + std::to_string(grid.maturity));
  detail::require(grid.n_buckets >= 1, "averaging grid needs at least one bucket");
}

DirichletMoments dirichlet_moments(const VolumeParams& params) {
  validate(params);
  const double n = params.n_buckets;
  DirichletMoments m;
  m.e_x = 1.0 / n;
  if (std::isinf(params.alpha)) {
    m.e_x2 = 1.0 / (n * n);
    m.e_xixj = 1.0 / (n * n);
    return m;
  }
  const double a = params.alpha;
  const double denom = n * (a * n + 1.0);
  m.e_x2 = (a + 1.0) / denom;
  m.var_x = (n - 1.0) / (n * denom);
  m.e_xixj = a / denom;
  m.cov_xixj = -1.0 / (n * denom);
  return m;
}

}  // namespace vwapgamma
