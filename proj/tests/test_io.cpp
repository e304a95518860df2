#include <doctest.h>

#include "gea/error.hpp"
#include "gea/io.hpp"
#include "test_helpers.hpp"

#include <random>

using namespace gea;
using testing_support::Q;

TEST_CASE("rationals are canonical strings") {
  CHECK(to_json(parse_rational("-8/12")).get<std::string>() == "-2/3");
  CHECK(to_json(Rational(5)).get<std::string>() == "5");
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("+7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
}

TEST_CASE("documented JSON shapes") {
  CHECK(to_json(trinomial()).dump() == R"({"min_exp":-1,"coeffs":["1","1","1"]})");
  CHECK(to_json(rf_normalize(Poly(Q({1, -1})), Poly(Q({1, -2, -3})))).dump() ==
        R"({"num":["1","-1"],"den":["1","-2","-3"]})");
  CHECK(to_json(LinearRecurrence{Q({1, 1}), Q({0, 1})}).dump() ==
        R"({"order":2,"rec_coeffs":["1","1"],"initials":["0","1"]})");
  const auto sol = ga(trinomial(), 2);
  CHECK(to_json(sol).dump() ==
        R"({"P":{"min_exp":-1,"coeffs":["1","1","1"]},"k":2,"common_den":["1","-2","-3"],)"
        R"("gfs":[{"num":["1","-1"],"den":["1","-2","-3"]},{"num":["0","2"],"den":["1","-2","-3"]}],"symmetric":true})");
  const DieSpec die({{-1, Rational(1, 3)}, {0, Rational(1, 3)}, {1, Rational(1, 3)}});
  CHECK(to_json(die).dump() ==
        R"({"faces":[{"value":-1,"prob":"1/3"},{"value":0,"prob":"1/3"},{"value":1,"prob":"1/3"}]})");
}

TEST_CASE("decoders") {
  CHECK(laurent_from_json(parse_json(R"({"min_exp": -1, "coeffs": ["1","1","1"]})")) == trinomial());
  CHECK(laurent_from_json(parse_json(R"({"min_exp": 4, "coeffs": ["0","0"]})")).is_zero());
  // Decoding normalizes.
  const auto f = ratfun_from_json(parse_json(R"({"num": ["2","-2"], "den": ["2","-6"]})"));
  CHECK(f.to_string() == "(1-t)/(1-3*t)");
  CHECK_THROWS_AS(ratfun_from_json(parse_json(R"({"num": ["1"], "den": []})")), DomainError);

  const auto die = die_from_json(parse_json(R"([{"value": 1, "prob": "1/2"}, {"value": -1, "prob": "1/2"}])"));
  CHECK(die.faces().size() == 2);
  CHECK_THROWS_AS(die_from_json(parse_json(R"({"faces": [{"value": 1, "prob": "1/2"}]})")), DomainError);
  CHECK_THROWS_AS(die_from_json(parse_json(R"({"faces": [{"value": 1.5, "prob": "1"}]})")), ParseError);

  CHECK_THROWS_AS(recurrence_from_json(parse_json(R"({"order": 3, "rec_coeffs": ["1","1"], "initials": ["0","1"]})")),
                  DomainError);
  CHECK_THROWS_AS(recurrence_from_json(parse_json(R"({"rec_coeffs": ["1","0"], "initials": ["0","1"]})")), DomainError);
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
  CHECK_THROWS_AS(laurent_from_json(parse_json(R"({"coeffs": []})")), ParseError);
}

TEST_CASE("property: GASolution survives a JSON round trip") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 15; ++trial) {
    const auto P = testing_support::to_laurent(oracle::random_poly(rng, 5));
    const long k = 1 + trial % 7;
    const auto sol = ga(P, k);
    const auto text = to_json(sol).dump();
    CHECK(ga_solution_from_json(parse_json(text)) == sol);
    CHECK(to_json(ga_solution_from_json(parse_json(text))).dump() == text);
  }
}
