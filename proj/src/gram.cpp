#include "nhosc/gram.h"

#include "nhosc/errors.h"

namespace nhosc {

namespace {

const JordanCell& cell_of(const std::vector<JordanCell>& cells, int n) {
  for (const auto& c : cells) {
    if (c.n == n) return c;
  }
  throw std::out_of_range("no cell with n = " + std::to_string(n));
}

void require_shared_params(const std::vector<JordanCell>& cells) {
  for (const auto& c : cells) {
    if (!(c.params() == cells.front().params())) throw ParamMismatch("cells carry different params");
  }
}

PiRational scaled_pairing(const AnsatzFn& f, const AnsatzFn& g, int n, int m,
                          const std::vector<JordanCell>& cells) {
  PiRational value = pairing(f, g);
  if (n == m) value = ComplexRational(cell_of(cells, n).gram_scale()) * value;
  return value;
}

template <typename Expected>
std::vector<PatternMismatch> mismatches(const GramMatrix& g, Expected expected) {
  std::vector<PatternMismatch> out;
  for (std::size_t r = 0; r < g.indices.size(); ++r) {
    for (std::size_t c = 0; c < g.indices.size(); ++c) {
      PiRational want = expected(g.indices[r], g.indices[c]);
      if (!(g.entries[r][c] == want)) out.push_back({g.indices[r], g.indices[c], g.entries[r][c], want});
    }
  }
  return out;
}

}  // namespace

std::vector<GramIndex> basis_indices(const std::vector<JordanCell>& cells) {
  std::vector<GramIndex> idx;
  for (const auto& c : cells) {
    for (int k = 0; k < static_cast<int>(c.chain.size()); ++k) idx.push_back({c.n, k});
  }
  return idx;
}

GramMatrix gram(const std::vector<JordanCell>& cells) {
  GramMatrix g;
  if (cells.empty()) return g;
  require_shared_params(cells);
  g.indices = basis_indices(cells);
  const std::size_t dim = g.indices.size();
  g.entries.assign(dim, std::vector<PiRational>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = r; c < dim; ++c) {
      const auto& [n, k] = g.indices[r];
      const auto& [m, l] = g.indices[c];
      PiRational v = scaled_pairing(cell_of(cells, n).chain[k], cell_of(cells, m).chain[l], n, m, cells);
      g.entries[r][c] = v;
      g.entries[c][r] = v;
    }
  }
  return g;
}

GramMatrix jordan_matrix(const std::vector<JordanCell>& cells, int n_max) {
  std::vector<JordanCell> used;
  for (const auto& c : cells) {
    if (c.n <= n_max) used.push_back(c);
  }
  GramMatrix j;
  if (used.empty()) return j;
  require_shared_params(used);
  j.indices = basis_indices(used);
  const std::size_t dim = j.indices.size();
  j.entries.assign(dim, std::vector<PiRational>(dim));
  std::vector<AnsatzFn> h_applied;
  for (const auto& [m, l] : j.indices) h_applied.push_back(apply_H(cell_of(used, m).chain[l]));
  for (std::size_t r = 0; r < dim; ++r) {
    const auto& [n, k] = j.indices[r];
    const JordanCell& row_cell = cell_of(used, n);
    const AnsatzFn& dual = row_cell.chain[row_cell.p - k - 1];
    for (std::size_t c = 0; c < dim; ++c) {
      j.entries[r][c] = scaled_pairing(dual, h_applied[c], n, j.indices[c].n, used);
    }
  }
  return j;
}

PiRational expected_gram_entry(const GramIndex& row, const GramIndex& col, const std::vector<JordanCell>& cells) {
  if (row.n != col.n) return {};
  return {row.k + col.k == cell_of(cells, row.n).p - 1 ? ComplexRational(1) : ComplexRational()};
}

PiRational expected_jordan_entry(const GramIndex& row, const GramIndex& col, const std::vector<JordanCell>& cells) {
  if (row.n != col.n) return {};
  if (row.k == col.k) return {ComplexRational(cell_of(cells, row.n).energy)};
  if (col.k == row.k + 1) return {ComplexRational(1)};
  return {};
}

std::vector<PatternMismatch> gram_mismatches(const GramMatrix& g, const std::vector<JordanCell>& cells) {
  return mismatches(g, [&](const GramIndex& r, const GramIndex& c) { return expected_gram_entry(r, c, cells); });
}

std::vector<PatternMismatch> jordan_mismatches(const GramMatrix& j, const std::vector<JordanCell>& cells) {
  return mismatches(j, [&](const GramIndex& r, const GramIndex& c) { return expected_jordan_entry(r, c, cells); });
}

}  // namespace nhosc
