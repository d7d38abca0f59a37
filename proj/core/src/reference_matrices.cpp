#include "pcmi/reference_matrices.hpp"

namespace pcmi::reference {

Pcm inversion_example() {
  return Pcm::from_rows({{1.0, 1.0 / 2, 1.0 / 4},  //
                         {2.0, 1.0, 1.0 / 3},
                         {4.0, 3.0, 1.0}});
}

Pcm ai_intensification_counterexample() {
  return Pcm::from_rows({{1.0, 2.0, 8.0},  //
                         {1.0 / 2, 1.0, 2.0},
                         {1.0 / 8, 1.0 / 2, 1.0}});
}

Pcm cci_intensification_counterexample() {
  return Pcm::from_rows({{1.0, 3.0, 7.0},  //
                         {1.0 / 3, 1.0, 1.0 / 2},
                         {1.0 / 7, 2.0, 1.0}});
}

Pcm ambiguity_example() {
  return Pcm::from_rows({{1.0, 2.0, 3.0, 1.0 / 2},
                         {1.0 / 2, 1.0, 4.0, 1.0 / 3},
                         {1.0 / 3, 1.0 / 4, 1.0, 2.0},
                         {2.0, 3.0, 1.0 / 2, 1.0}});
}

std::vector<NamedMatrix> inconsistent_examples() {
  return {
      {"inversion", inversion_example()},
      {"inversion-transposed", transpose(inversion_example())},
      {"ai-intensification", ai_intensification_counterexample()},
      {"cci-intensification", cci_intensification_counterexample()},
      {"ambiguity", ambiguity_example()},
  };
}

}  // namespace pcmi::reference
