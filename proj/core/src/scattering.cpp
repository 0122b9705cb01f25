// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#include "tlsim/scattering.hpp"

#include <cmath>

#include "tlsim/constants.hpp"
#include "tlsim/errors.hpp"
#include "tlsim/math.hpp"

namespace tlsim {

void validate(const ScatteringModel& model) {
  if (model.kind == ScatteringKind::ForwardPeaked) {
    if (!(model.anisotropy >= 0.0 && model.anisotropy < 1.0)) {
      throw validity_error("forward-peaked anisotropy must lie in [0, 1)");
    }
  }
}

double ScatteringModel::angular_density(double cos_theta) const {
  switch (kind) {
    case ScatteringKind::CompleteDecoherence:
      throw validity_error("complete decoherence has no angular density");
    case ScatteringKind::Isotropic:
      return 1.0 / (4.0 * constants::pi);
    case ScatteringKind::ForwardPeaked: {
      const double g = anisotropy;
      const double denom = 1.0 + g * g - 2.0 * g * cos_theta;
      return (1.0 - g * g) / (4.0 * constants::pi * denom * std::sqrt(denom));
    }
  }
  throw validity_error("unknown scattering kind");
}

ScatteringModel ScatteringModel::complete() { return {ScatteringKind::CompleteDecoherence, 0.0}; }

ScatteringModel ScatteringModel::isotropic() { return {ScatteringKind::Isotropic, 0.0}; }

ScatteringModel ScatteringModel::forward_peaked(double g) {
  ScatteringModel model{ScatteringKind::ForwardPeaked, g};
  validate(model);
  return model;
}

}  // namespace tlsim
