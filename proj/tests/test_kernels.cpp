#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rbo/kernels.hpp"
#include "rbo/matrix.hpp"

using namespace rbo;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = u(rng);
  return m;
}

}  // namespace

TEST_CASE("matmul: parallel path matches serial bitwise") {
  for (std::size_t n : {3u, 17u, 64u, 120u}) {
    Matrix a = random_matrix(n, n + 1, 1 + n);
    Matrix b = random_matrix(n + 1, n, 1000 + n);
    Matrix c_par(n, n), c_ser(n, n);
    kernels::set_parallel(true);
    kernels::matmul(a, b, c_par);
    kernels::matmul_serial(a, b, c_ser);
    CHECK((c_par - c_ser).norm_max() == 0.0);
  }
  kernels::set_parallel(true);
}

TEST_CASE("eliminate_rows: parallel matches serial bitwise") {
  const std::size_t rows = 96, cols = 200;
  Matrix a = random_matrix(rows, cols, 7);
  Matrix b = a;
  std::vector<double> f(rows);
  for (std::size_t i = 0; i < rows; ++i) f[i] = a(i, 0) / a(2, 0);
  kernels::eliminate_rows(a.data().data(), cols, 2, 3, rows, f.data());
  kernels::eliminate_rows_serial(b.data().data(), cols, 2, 3, rows, f.data());
  CHECK((a - b).norm_max() == 0.0);
}

TEST_CASE("max_over: parallel reduction is order-independent") {
  std::vector<double> xs(1000);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (double& x : xs) x = u(rng);
  auto score = [&](std::size_t i) { return xs[i]; };
  CHECK(kernels::max_over(xs.size(), score) == kernels::max_over_serial(xs.size(), score));
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(257, 0);
  kernels::parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}
