#include <cmath>
#include <cstring>

#include "common.hpp"
#include "sdwt/parallel.hpp"

using namespace sdwt;

TEST_SUITE("parallel") {
  TEST_CASE("chunked_reduce is bit-identical across thread counts") {
    auto run = [] {
      return chunked_reduce(100000, 777, 0.0, [](double& acc, std::size_t i) { acc += std::sin(0.001 * static_cast<double>(i)) / 3.0; });
    };
    const std::size_t saved = thread_count();
    set_thread_count(1);
    const double one = run();
    for (std::size_t t : {2u, 4u, 8u}) {
      set_thread_count(t);
      const double v = run();
      CHECK(std::memcmp(&one, &v, sizeof(double)) == 0);
    }
    set_thread_count(saved);
  }

  TEST_CASE("pairwise_sum matches exact small sums") {
    std::vector<double> v(1000, 0.1);
    CHECK(pairwise_sum(v) == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
  }

  TEST_CASE("lowest failing chunk is rethrown") {
    set_thread_count(4);
    try {
      parallel_for(64, [](std::size_t i) {
        if (i == 5 || i == 40) throw std::runtime_error(std::to_string(i));
      });
      FAIL("no throw");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "5");
    }
    set_thread_count(0);
  }
}
