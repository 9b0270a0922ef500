#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <padiclab/serialization.hpp>

#include "support.hpp"
#include "support_functions.hpp"

using namespace padiclab;

TEST_CASE("test functions round-trip through JSON") {
  test_support::SplitMix64 rng(1000);
  for (std::uint64_t p : {2ull, 5ull}) {
    for (int rep = 0; rep < 8; ++rep) {
      TestFunction f = test_support::random_test_function(rng, p);
      TestFunction g = test_function_from_json(test_function_to_json(f));
      for (int i = 0; i < 30; ++i) {
        PadicRational x(p, test_support::random_rational(rng));
        CHECK(f.evaluate(x) == g.evaluate(x));
      }
    }
  }
}

TEST_CASE("stated serialization shapes") {
  TestFunction f(2);
  f.add_term(Ball(2, Rational(1, 2), -1), Complex{1.0, 0.0});
  Json j = test_function_to_json(f.canonicalize());
  CHECK(j["p"] == 2);
  CHECK(j["terms"][0]["center"] == "1/2");
  CHECK(j["terms"][0]["gamma"] == -1);
  CHECK(j["terms"][0]["re"] == 1.0);

  WaveletIndex idx(2, 1, 1, Rational(1, 2));
  Json ji = wavelet_index_to_json(idx);
  CHECK(ji["N"] == 1);
  CHECK(ji["j"] == 1);
  CHECK(ji["eps"] == "1/2");
  CHECK(wavelet_index_from_json(2, ji) == idx);
}

TEST_CASE("expansions round-trip with tails") {
  test_support::SplitMix64 rng(1001);
  WaveletExpansion e = test_support::random_finite_expansion(rng, 3);
  e.set_tails(0.25, 0.5, -2L);
  WaveletExpansion back = expansion_from_json(expansion_to_json(e));
  CHECK(back.coeffs().size() == e.coeffs().size());
  CHECK(back.l2_tail() == 0.25);
  CHECK(back.sup_tail() == 0.5);
  REQUIRE(back.tail_floor().has_value());
  CHECK(*back.tail_floor() == -2);
  auto it = back.coeffs().begin();
  for (const auto& [idx, c] : e.coeffs()) {
    CHECK(it->first == idx);
    CHECK(it->second == c);
    ++it;
  }
}

TEST_CASE("interaction configs round-trip and validate") {
  Json j = Json::parse(R"({
    "p": 2, "alpha": 1.5, "points": ["0", "1", "1/2"],
    "B": [[[1,0],[0,0],[0,0]],[[0,0],[2,0],[0,0]],[[0,0],[0,0],[3,0]]],
    "r": 0.25
  })");
  InteractionConfig cfg = interaction_config_from_json(j);
  CHECK(cfg.size() == 3);
  CHECK(cfg.alpha() == 1.5);
  CHECK(cfg.diagonal_regularization() == 0.25);
  CHECK_FALSE(cfg.eta_matrix().has_value());
  Json back = interaction_config_to_json(cfg);
  CHECK(back["points"][2] == "1/2");
  CHECK(back["B"][1][1][0] == 2.0);

  // complex entries as [re, im]
  Json jy = Json::parse(R"({
    "p": 3, "alpha": 2.0, "points": ["0", "1"],
    "B": [[[0,1],[0,0]],[[0,0],[0,-1]]],
    "Y": [[[1,0],[0,0]],[[0,0],[1,0]]]
  })");
  InteractionConfig cfg2 = interaction_config_from_json(jy);
  CHECK(cfg2.coupling()(0, 0) == Complex{0.0, 1.0});
  REQUIRE(cfg2.eta_matrix().has_value());

  CHECK_THROWS_AS(interaction_config_from_json(Json::parse(R"({"p": 2})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(interaction_config_from_json(Json::parse(
                      R"({"p": 2, "alpha": 1.5, "points": ["0"], "B": [[[1,0],[0,0]]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(interaction_config_from_json(Json::parse(
                      R"({"p": 2, "alpha": 0.3, "points": ["0"], "B": [[[1,0]]]})")),
                  NotInL2Error);
}
