#pragma once

#include <doctest.h>

#include <complex>
#include <cstdint>
#include <random>

#include "sdwt/errors.hpp"

namespace testing {

// Runs f and checks it throws sdwt::Error with `code`.
template <class F>
void expect_error(sdwt::ErrorCode code, F&& f) {
  bool thrown = false;
  try {
    f();
  } catch (const sdwt::Error& e) {
    thrown = true;
    CHECK_MESSAGE(e.code() == code, "got " << sdwt::to_string(e.code()));
  }
  CHECK_MESSAGE(thrown, "expected " << sdwt::to_string(code));
}

// Seeded uniform draws for property tests.
struct Draw {
  std::mt19937_64 eng;
  explicit Draw(std::uint64_t seed) : eng(seed) {}
  double operator()(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

inline double rel(std::complex<double> a, std::complex<double> b) { return std::abs(a - b) / std::abs(b); }

}  // namespace testing
