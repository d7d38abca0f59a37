#pragma once

// Worked examples used as seeded cases by the property checkers.

#include <string_view>
#include <vector>

#include "pcmi/pcm.hpp"

namespace pcmi::reference {

/// 3x3 matrix whose transpose cannot be reached by any reordering.
Pcm inversion_example();

/// 3x3 matrix on which AI decreases between b = 2 and b = 3.
Pcm ai_intensification_counterexample();

/// 3x3 matrix on which CCI reports less inconsistency as b grows.
Pcm cci_intensification_counterexample();

/// 4x4 matrix with r_14 = {1/2, 2/3, 6}.
Pcm ambiguity_example();

struct NamedMatrix {
  std::string_view name;
  Pcm matrix;
};

/// All inconsistent reference matrices, including the transpose of the
/// inversion example.
std::vector<NamedMatrix> inconsistent_examples();

}  // namespace pcmi::reference
