#pragma once

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "pcmi/error.hpp"
#include "pcmi/pcm.hpp"

namespace pcmi::test {

inline ::testing::AssertionResult matrices_near(const Pcm& a, const Pcm& b,
                                                double rel = 1e-12) {
  if (a.order() != b.order()) {
    return ::testing::AssertionFailure() << "orders " << a.order() << " vs " << b.order();
  }
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      const double x = a(i, j);
      const double y = b(i, j);
      if (std::abs(x - y) > rel * std::max(std::abs(x), std::abs(y))) {
        return ::testing::AssertionFailure()
               << "entry (" << i << "," << j << "): " << x << " vs " << y;
      }
    }
  }
  return ::testing::AssertionSuccess();
}

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pcmi::Error thrown";
  return ErrorCode::kInvalidArgument;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace pcmi::test
