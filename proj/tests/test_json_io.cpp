#include <doctest.h>

#include "nhosc/errors.h"
#include "nhosc/json_io.h"
#include "support.h"

using namespace nhosc;

TEST_CASE("polynomial JSON is canonical") {
  LaurentBiPoly p;
  p.add_term(2, 0, Rational(1, 2));
  p.add_term(0, 3, ComplexRational(Rational(0), Rational(-1)));
  const Json j = poly_to_json(p);
  CHECK(j.dump() ==
        R"([{"zPow":0,"zbarPow":3,"re":"0/1","im":"-1/1"},{"zPow":2,"zbarPow":0,"re":"1/2","im":"0/1"}])");
  CHECK(poly_from_json(j) == p);
}

TEST_CASE("params JSON") {
  const ModelParams q = ModelParams::quartic(2, Rational(1, 2), Rational(1, 3));
  const Json j = params_to_json(q);
  CHECK(j["lambda"] == "2/1");
  CHECK(j["b"] == "1/2");
  CHECK(j["omega"] == "1/3");
  CHECK(j["F"].size() == 5);
  CHECK(j["F"][2]["re"] == "1/4");
  CHECK(params_from_json(j) == q);

  const ModelParams g = ModelParams::general(1, {0, ComplexRational::i()});
  const Json jg = params_to_json(g);
  CHECK(jg["b"].is_null());
  CHECK(params_from_json(jg) == g);

  Json bad = j;
  bad["b"] = "1/3";
  CHECK_THROWS_AS(params_from_json(bad), ParseError);
}

TEST_CASE("round trips of random ansatz functions") {
  testing::Gen gen(91);
  for (int t = 0; t < 30; ++t) {
    const AnsatzFn f = gen.ansatz(gen.general_params(4), 4, 6);
    CHECK(ansatz_from_json(parse_json(dump(ansatz_to_json(f)))) == f);
  }
}

TEST_CASE("cells file round trip is byte-identical") {
  const ModelParams params = ModelParams::quartic(Rational(3, 2), Rational(-2, 3), Rational(1, 7));
  std::vector<JordanCell> cells;
  for (int n = 0; n <= 3; ++n) cells.push_back(build_cell(params, n));
  const std::string text = dump(cells_file_to_json(cells));
  const auto back = cells_file_from_json(parse_json(text));
  REQUIRE(back.size() == cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(back[i].chain == cells[i].chain);
    CHECK(back[i].constants == cells[i].constants);
    CHECK(back[i].energy == cells[i].energy);
  }
  CHECK(dump(cells_file_to_json(back)) == text);
}

TEST_CASE("malformed input raises ParseError") {
  CHECK_THROWS_AS(parse_json("{not json"), ParseError);
  CHECK_THROWS_AS(rational_from_json(Json(0.5)), ParseError);
  CHECK_THROWS_AS(poly_from_json(parse_json(R"([{"zPow":-1,"zbarPow":0,"re":"1","im":"0"}])")), ParseError);
  CHECK_THROWS_AS(poly_from_json(parse_json(R"([{"zPow":1,"re":"1","im":"0"}])")), ParseError);
  CHECK_THROWS_AS(cells_file_from_json(parse_json(R"({"format":"other","cells":[]})")), ParseError);
}

TEST_CASE("pi-valued entries carry their unit") {
  const Json j = pi_rational_to_json(PiRational{ComplexRational(Rational(-1, 4))});
  CHECK(j["re"] == "-1/4");
  CHECK(j["unit"] == "×π");
}
