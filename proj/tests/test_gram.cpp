#include <doctest.h>

#include "nhosc/errors.h"
#include "nhosc/gram.h"

using namespace nhosc;

namespace {

std::vector<JordanCell> cells_up_to(const ModelParams& params, int n_max) {
  std::vector<JordanCell> cells;
  for (int n = 0; n <= n_max; ++n) cells.push_back(build_cell(params, n));
  return cells;
}

}  // namespace

TEST_CASE("basis ordering") {
  const auto cells = cells_up_to(ModelParams::quartic(2, Rational(1, 2), Rational(1, 3)), 2);
  const auto idx = basis_indices(cells);
  REQUIRE(idx.size() == 6);
  CHECK(idx[0] == GramIndex{0, 0});
  CHECK(idx[3] == GramIndex{2, 0});
  CHECK(idx[5] == GramIndex{2, 2});
}

TEST_CASE("Gram matrix is block anti-diagonal for n <= 4") {
  for (const auto& params : {ModelParams::quartic(2, Rational(1, 2), Rational(1, 3)),
                             ModelParams::quartic(Rational(5, 3), Rational(-1, 4), Rational(2, 9))}) {
    const auto cells = cells_up_to(params, 4);
    const GramMatrix g = gram(cells);
    CHECK(g.indices.size() == 15);
    CHECK(gram_mismatches(g, cells).empty());
    CHECK(g.entries[0][0] == PiRational{ComplexRational(1)});
    CHECK(g.entries[1][2] == PiRational{ComplexRational(1)});
    CHECK(g.entries[1][1].is_zero());
  }
}

TEST_CASE("Jordan matrix is the exact block Jordan form") {
  const auto cells = cells_up_to(ModelParams::quartic(2, Rational(1, 2), Rational(1, 3)), 4);
  const GramMatrix j = jordan_matrix(cells, 4);
  CHECK(jordan_mismatches(j, cells).empty());
  // Row (4,2), column (4,3): unit superdiagonal; (4,2)x(4,2): E_4 = 20.
  CHECK(j.entries[12][13] == PiRational{ComplexRational(1)});
  CHECK(j.entries[12][12] == PiRational{ComplexRational(20)});
  CHECK(jordan_matrix(cells, 1).indices.size() == 3);
}

TEST_CASE("pattern checks catch a damaged chain") {
  auto cells = cells_up_to(ModelParams::quartic(2, Rational(1, 2), Rational(1, 3)), 2);
  cells[2].chain[1] += AnsatzFn(LaurentBiPoly::monomial(Rational(1, 10), 0, 2), cells[2].params());
  CHECK_FALSE(gram_mismatches(gram(cells), cells).empty());
}

TEST_CASE("cells with different params are rejected") {
  std::vector<JordanCell> cells = {build_cell(ModelParams::quartic(2, 1, 0), 0),
                                   build_cell(ModelParams::quartic(2, 1, 1), 1)};
  CHECK_THROWS_AS(gram(cells), ParamMismatch);
}
