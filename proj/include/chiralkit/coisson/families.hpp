#pragma once

#include <string>
#include <vector>

#include "chiralkit/coisson/fourier.hpp"

namespace chiralkit::coisson {

/// A named mode generator. Families:
///   heis+  i e^{imσ} ∂_z x^j          heis-  i e^{imσ} ∂_z̄ x^j
///   vir+   −i e^{imσ} g(∂_zx, ∂_zx)   vir-   −i e^{imσ} g(∂_z̄x, ∂_z̄x)
///   ham    e^{imσ} H_{∂_τ}|Sol° = −(i/2) e^{imσ}(g(∂_τx,∂_τx) − g(∂_σx,∂_σx))
///   mom    −e^{imσ} p_j               wind   e^{imσ} ∂_σ x^j
struct ModeGenerator {
  std::string family;
  int field = 0;  // 0-based; ignored by vir± and ham
  int mode = 0;

  /// Parses "family", "family:j" (1-based field); throws UnknownFamily.
  static ModeGenerator parse(const std::string& spec, int mode);
  std::string label() const;
};

/// The generator as a density in field jets (before identification).
DiffPoly mode_density_fields(const ModeGenerator& g, const Identification& id);
LocalDensity mode_density(const ModeGenerator& g, const Identification& id);

struct StructureConstant {
  ModeGenerator left;
  ModeGenerator right;
  FourierClass value;
};

/// Brackets of every ordered pair drawn from families × modes.
std::vector<StructureConstant> mode_structure_constants(const std::vector<std::string>& families,
                                                        const std::vector<int>& modes, const Identification& id,
                                                        const BracketTable& t);

}  // namespace chiralkit::coisson
