#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "somq/errors.hpp"
#include "somq/metrics_internal.hpp"

using namespace somq;

namespace {

CodeBook chain(std::initializer_list<double> values) {
  Matrix m;
  for (double v : values) m.push_row(std::vector<double>{v});
  return CodeBook(m, MapGrid(1, values.size()));
}

Dataset column(std::initializer_list<double> values) {
  Matrix m;
  for (double v : values) m.push_row(std::vector<double>{v});
  return Dataset(m);
}

}  // namespace

TEST_SUITE_BEGIN("metrics_internal");

TEST_CASE("quantization error") {
  CHECK(quantization_error(chain({0, 1, 2}), column({0, 1, 2, 2})) == 0.0);
  CHECK(quantization_error(chain({0, 2}), column({0.5})) == doctest::Approx(0.5));

  std::mt19937_64 rng(3);
  const CodeBook cb(oracle::random_matrix(6, 3, rng), MapGrid(2, 3));
  Matrix x = oracle::random_matrix(40, 3, rng);
  Matrix doubled = x;
  for (std::size_t i = 0; i < x.rows(); ++i) doubled.push_row(x.row(i));
  CHECK(quantization_error(cb, Dataset(doubled)) == doctest::Approx(quantization_error(cb, Dataset(x))).epsilon(1e-14));
  CHECK_THROWS_AS(quantization_error(cb, column({1.0})), ShapeError);
}

TEST_CASE("distortion") {
  const Dataset data = column({0.0, 1.5, -2.0});
  // single unit: mean squared distance, independent of T
  const double single = (9.0 + 2.25 + 25.0) / 3.0;
  CHECK(distortion(chain({3.0}), data, KernelKind::gaussian, 0.1) == doctest::Approx(single));
  CHECK(distortion(chain({3.0}), data, KernelKind::gaussian, 50.0) == doctest::Approx(single));

  CHECK(distortion(chain({0.0, 1.0}), column({0.0}), KernelKind::gaussian, 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(distortion(chain({0.0, 1.0}), column({0.0}), KernelKind::gaussian, 0.0), DomainError);

  // window kernel: T=1 picks the BMU and its lattice neighbors
  const double w = distortion(chain({0.0, 1.0, 5.0}), column({0.0}), KernelKind::window, 1.0);
  CHECK(w == doctest::Approx(1.0));
}

TEST_CASE("distortion tends to the mean squared BMU distance as T -> 0") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const CodeBook cb(oracle::random_matrix(16, 2, rng), MapGrid(4, 4));
    const Dataset data(oracle::random_matrix(100, 2, rng));
    const auto b = oracle::bmus(cb.prototypes(), data.samples());
    double direct = 0;
    for (std::size_t i = 0; i < data.size(); ++i) direct += oracle::sq(data.samples(), i, cb.prototypes(), b[i]);
    direct /= static_cast<double>(data.size());
    CHECK(distortion(cb, data, KernelKind::gaussian, 1e-3) == doctest::Approx(direct).epsilon(1e-6));
  }
}

TEST_CASE("topographic error") {
  CHECK(topographic_error(chain({0, 1, 2}), column({0.4})) == 0.0);
  CHECK(topographic_error(chain({0, 2, 1}), column({0.9})) == 1.0);
  CHECK_THROWS_AS(topographic_error(chain({1.0}), column({0.0})), DegenerateGridError);

  // samples on the prototypes of an equispaced ordered square grid
  Matrix protos;
  for (int r = 0; r < 5; ++r) {
    for (int c = 0; c < 5; ++c) protos.push_row(std::vector<double>{double(r), double(c)});
  }
  const CodeBook grid(protos, MapGrid(5, 5));
  CHECK(topographic_error(grid, Dataset(protos)) == 0.0);
}

TEST_CASE("combined error") {
  CHECK(combined_error(chain({0, 1, 2}), column({0.6})) == doctest::Approx(1.16).epsilon(1e-14));
  // sample on m_b1, b2 adjacent: only the edge term remains
  CHECK(combined_error(chain({0, 3, 10}), column({3.0})) == doctest::Approx(9.0));
  // scrambled chain: b1 = unit 2 (1.0), b2 = unit 0 (0.0); the path goes through unit 1 (2.0)
  CHECK(combined_error(chain({0, 2, 1}), column({0.9})) == doctest::Approx(0.01 + 1.0 + 4.0));
  CHECK_THROWS_AS(combined_error(chain({1.0}), column({0.0})), DegenerateGridError);
}

TEST_CASE("combined error path costs match exhaustive enumeration") {
  std::mt19937_64 rng(23);
  for (Topology topo : {Topology::rectangular, Topology::hexagonal}) {
    for (int trial = 0; trial < 10; ++trial) {
      const MapGrid grid(3, 3, topo);
      const CodeBook cb(oracle::random_matrix(9, 2, rng), grid);
      for (std::size_t s = 0; s < 9; ++s) {
        const auto costs = map_path_costs(cb, s);
        for (std::size_t t = 0; t < 9; ++t) {
          CHECK(std::abs(costs[t] - oracle::exhaustive_path_cost(cb.prototypes(), grid, s, t)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("combined error is at least the mean squared BMU distance") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const CodeBook cb(oracle::random_matrix(12, 3, rng), MapGrid(3, 4));
    const Dataset data(oracle::random_matrix(60, 3, rng));
    const auto b = oracle::bmus(cb.prototypes(), data.samples());
    double floor = 0;
    for (std::size_t i = 0; i < data.size(); ++i) floor += oracle::sq(data.samples(), i, cb.prototypes(), b[i]);
    CHECK(combined_error(cb, data) >= floor / static_cast<double>(data.size()));
  }
}

TEST_CASE("trustworthiness and neighborhood preservation: examples") {
  // each sample on its own prototype of an equispaced chain
  const CodeBook line = chain({0, 1, 2, 3, 4, 5, 6, 7});
  const Dataset on_units = column({0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(trustworthiness(line, on_units, 1) == 1.0);
  CHECK(neighborhood_preservation(line, on_units, 1) == 1.0);
  CHECK(trustworthiness(line, on_units, 3) == 1.0);
  CHECK(neighborhood_preservation(line, on_units, 3) == 1.0);

  // two tight clusters on adjacent units; values frozen from an independent enumeration
  const CodeBook cb(Matrix{{0.05, 0.05}, {5.05, 5.05}, {10, 10}}, MapGrid(1, 3));
  const Dataset two(Matrix{{0, 0}, {0, 0.1}, {0.1, 0}, {5, 5}, {5, 5.1}, {5.1, 5}});
  CHECK(trustworthiness(cb, two, 1) == doctest::Approx(11.0 / 12.0).epsilon(1e-14));
  CHECK(neighborhood_preservation(cb, two, 1) == 1.0);

  // everything collapses onto one unit: trust is penalized, NP is not (the
  // projected neighborhood is every other sample)
  const Dataset spread = column({0, 1, 3, 7, 8.5, 9});
  CHECK(trustworthiness(chain({4, 100}), spread, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(neighborhood_preservation(chain({4, 100}), spread, 1) == 1.0);
}

TEST_CASE("trustworthiness and neighborhood preservation: preconditions") {
  const CodeBook line = chain({0, 1, 2});
  const Dataset data = column({0, 1, 2, 3, 4, 5});
  CHECK_THROWS_AS(trustworthiness(line, data, 0), DomainError);
  CHECK_THROWS_AS(trustworthiness(line, data, 3), DomainError);
  CHECK_NOTHROW(trustworthiness(line, data, 2));
  CHECK_THROWS_AS(neighborhood_preservation(line, column({0, 1}), 1), DomainError);
}

TEST_CASE("trustworthiness and neighborhood preservation match the brute-force oracle") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> n_pick(12, 30);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(n_pick(rng));
    const MapGrid grid(3, 4, trial % 3 == 0 ? Topology::hexagonal : Topology::rectangular);
    const CodeBook cb(oracle::random_matrix(12, 2, rng), grid);
    const Dataset data(oracle::random_matrix(n, 2, rng));
    for (std::size_t k : {1u, 2u, 5u}) {
      const auto ref = oracle::trust_and_preservation(cb.prototypes(), data.samples(), grid, k);
      CHECK(std::abs(trustworthiness(cb, data, k) - ref.trust) <= 1e-12);
      CHECK(std::abs(neighborhood_preservation(cb, data, k) - ref.preservation) <= 1e-12);
    }
  }
}

TEST_CASE("topographic product") {
  // 0,1,3,7: unit 2 (at 3) is closer in input space to unit 0 than to unit 3,
  // so one ordering pair disagrees; enumerating Q1/Q2 by hand gives log(2/3)/48.
  CHECK(topographic_product(chain({0, 1, 3, 7})) == doctest::Approx(std::log(2.0 / 3.0) / 48.0).epsilon(1e-13));
  CHECK(topographic_product(chain({0, 1, 2, 3, 4, 5})) == doctest::Approx(0.0));
  CHECK_THROWS_AS(topographic_product(chain({0, 1, 1})), DegenerateCodebookError);
  CHECK_THROWS_AS(topographic_product(chain({0})), DegenerateGridError);
}

TEST_CASE("topographic product sign: 2-D map folded onto 1-D data") {
  // 4x4 map whose prototypes snake along a line
  Matrix protos;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) protos.push_row(std::vector<double>{double(r * 4 + (r % 2 ? 3 - c : c))});
  }
  CHECK(topographic_product(CodeBook(protos, MapGrid(4, 4))) > 0.0);
}

TEST_CASE("topographic product matches the brute-force oracle") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const MapGrid grid = trial % 2 ? MapGrid(3, 4) : MapGrid(2, 5, Topology::hexagonal);
    const CodeBook cb(oracle::random_matrix(grid.size(), 3, rng), grid);
    CHECK(std::abs(topographic_product(cb) - oracle::topographic_product(cb.prototypes(), grid)) <= 1e-9);
  }
}

TEST_CASE("topographic function") {
  // ordered chain with dense data: only lattice neighbors connect
  Matrix dense;
  for (int i = 0; i <= 400; ++i) dense.push_row(std::vector<double>{i / 40.0});
  const CodeBook line = chain({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const TopographicFunction tf = topographic_function(line, Dataset(dense));
  REQUIRE(tf.order.size() == 10);
  for (std::size_t v : tf.values) CHECK(v == 0);
  CHECK(tf.normalized_order.back() == 1.0);
  CHECK(tf.normalized_values.size() == 10);  // K = 11 > 3^1

  // scrambled chain: units 0 and 2 have adjacent receptive fields at map distance 2
  const CodeBook scrambled = chain({0, 2, 1});
  const TopographicFunction s = topographic_function(scrambled, column({0.4, 0.6}));
  CHECK(s.values == std::vector<std::size_t>{2, 0});
  const Connectivity conn = receptive_field_connectivity(scrambled, column({0.4, 0.6}));
  CHECK(topographic_function_value(conn, scrambled.grid(), 1) == 2);
  CHECK(topographic_function_value(conn, scrambled.grid(), 0) == 2);
  CHECK(topographic_function_value(conn, scrambled.grid(), 5) == 0);
  CHECK(s.normalized_values.empty());  // K(K - 3) = 0
}

TEST_CASE("topographic function is nonincreasing and vanishes at the max distance") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const CodeBook cb(oracle::random_matrix(20, 2, rng), MapGrid(4, 5));
    const TopographicFunction tf = topographic_function(cb, Dataset(oracle::random_matrix(200, 2, rng)));
    for (std::size_t i = 1; i < tf.values.size(); ++i) CHECK(tf.values[i] <= tf.values[i - 1]);
    CHECK(tf.values.back() == 0);
    CHECK(tf.normalized_values.size() == tf.values.size());
    CHECK(tf.normalized_values[0] == doctest::Approx(double(tf.values[0]) / (20.0 * 11.0)));
  }
}

TEST_CASE("Kruskal-Shepard error") {
  CHECK(kruskal_shepard_error(chain({0, 1}), column({0, 1})) == 0.0);

  // everything on one unit: the map matrix is zero
  const Dataset data = column({0, 1, 3});
  const double expected = 2.0 * ((1.0 / 9) * (1.0 / 9) + 1.0 + (4.0 / 9) * (4.0 / 9)) / 6.0;
  CHECK(kruskal_shepard_error(chain({1, 50}), data) == doctest::Approx(expected).epsilon(1e-14));
  CHECK_THROWS_AS(kruskal_shepard_error(chain({1, 50}), column({2, 2, 2})), DegenerateDataError);
  CHECK_THROWS_AS(kruskal_shepard_error(chain({1, 50}), column({2})), DegenerateDataError);
}

TEST_CASE("C measure") {
  CHECK(c_measure(chain({0, 2}), column({0, 2})) == 2.0);
  CHECK(c_measure(chain({0, 50}), column({0, 2, 3, 7})) == 0.0);
  // three samples on units 0, 1, 2 of a chain: 1*1 + 2*2 + 1*1
  CHECK(c_measure(chain({0, 1, 2}), column({0, 1, 2})) == 6.0);
}

TEST_SUITE_END();
