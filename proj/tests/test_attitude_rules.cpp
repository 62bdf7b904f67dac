#include <random>

#include <doctest.h>

#include "attisim/attitude_rules.hpp"

using namespace attisim;

namespace {

Personality with(double O, double C, double E, double A, double N) {
  return {O, C, E, A, N};
}

}  // namespace

TEST_CASE("agreeableness alone triggers friendly") {
  auto out = compute_attitudes(AffectVector{{"exuberant", 0.2}},
                               with(0.5, 0.5, 0.5, 0.8, 0.5));
  CHECK(out.get("friendly") == doctest::Approx(0.8));
}

TEST_CASE("aggressive fires on both disjuncts and takes the fuzzy max") {
  auto out = compute_attitudes(AffectVector{{"hostile", 0.7}},
                               with(0.5, 0.5, 0.5, 0.4, 0.6));
  CHECK(out.get("aggressive") == doctest::Approx(0.7));
}

TEST_CASE("values exactly at the threshold fire nothing") {
  auto out = compute_attitudes(AffectVector{}, with(0.5, 0.5, 0.5, 0.5, 0.5));
  for (const auto& info : recruiter_labels()) {
    if (info.kind == AffectKind::Attitude) {
      CAPTURE(info.name);
      CHECK(out.get(info.name) == 0.0);
    }
  }
}

TEST_CASE("threshold must stay strictly inside (0,1)") {
  CHECK_THROWS_AS(compute_attitudes(AffectVector{}, Personality{}, RuleConfig{0.0}),
                  ValidationError);
  CHECK_THROWS_AS(compute_attitudes(AffectVector{}, Personality{}, RuleConfig{1.0}),
                  ValidationError);
}

TEST_CASE("moods must be mood labels") {
  CHECK_THROWS_AS(compute_attitudes(AffectVector{{"joy", 0.4}}, Personality{}),
                  ValidationError);
}

TEST_CASE("mood compensates personality and vice versa") {
  // Agreeable but flat mood.
  auto out = compute_attitudes(AffectVector{}, with(0.5, 0.5, 0.5, 0.9, 0.5));
  CHECK(out.get("friendly") > 0.0);
  // Exuberant mood but disagreeable personality.
  out = compute_attitudes(AffectVector{{"exuberant", 0.9}},
                          with(0.5, 0.5, 0.5, 0.1, 0.5));
  CHECK(out.get("friendly") > 0.0);
}

TEST_CASE("randomized properties: range, monotonicity, purity") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    Personality p{unit(rng), unit(rng), unit(rng), unit(rng), unit(rng)};
    AffectVector moods{{"relaxed", unit(rng)},
                       {"exuberant", unit(rng)},
                       {"hostile", unit(rng)},
                       {"bored", unit(rng)},
                       {"disdainful", unit(rng)}};
    const auto out = compute_attitudes(moods, p);
    for (const auto& [label, value] : out.entries()) {
      CHECK(value >= 0.0);
      CHECK(value <= 1.0);
    }

    // More hostility never softens aggression or dominance.
    AffectVector hotter = moods;
    hotter.set("hostile", std::min(1.0, moods.get("hostile") + 0.3));
    const auto out2 = compute_attitudes(hotter, p);
    if (out.get("aggressive") > 0.0 && out2.get("aggressive") > 0.0) {
      CHECK(out2.get("aggressive") >= out.get("aggressive"));
    }
    if (out.get("dominant") > 0.0 && out2.get("dominant") > 0.0) {
      CHECK(out2.get("dominant") >= out.get("dominant"));
    }

    // Pure function: same inputs, same outputs.
    CHECK(compute_attitudes(moods, p).entries() == out.entries());
  }
}
