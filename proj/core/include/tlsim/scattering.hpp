// Copyright the tlsim authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace tlsim {

// Angular structure of a single elastic collision, used both for the
// coherence kernel and for Monte-Carlo momentum kicks.
enum class ScatteringKind {
  CompleteDecoherence,  // every collision fully destroys coherence
  Isotropic,            // uniform differential cross-section
  ForwardPeaked,        // Henyey-Greenstein lobe with anisotropy g
};

struct ScatteringModel {
  ScatteringKind kind = ScatteringKind::CompleteDecoherence;
  double anisotropy = 0.0;  // g in [0, 1) for ForwardPeaked, ignored otherwise

  // Normalized angular density p(cos theta): integral over the sphere is 1.
  double angular_density(double cos_theta) const;

  static ScatteringModel complete();
  static ScatteringModel isotropic();
  static ScatteringModel forward_peaked(double g);
};

void validate(const ScatteringModel& model);

}  // namespace tlsim
