#pragma once

#include <vector>

#include "nhosc/jordan.h"
#include "nhosc/moments.h"

namespace nhosc {

struct GramIndex {
  int n = 0;
  int k = 0;

  friend bool operator==(const GramIndex&, const GramIndex&) = default;
};

/// Pairing matrix over the extended basis {Ψ_{n,k}}.
///
/// Entries inside one cell are scaled by that cell's σ_n, so a fixed cell
/// shows π on its anti-diagonal. Entries between different cells are the
/// unscaled pairings of the stored rational chains: the cross scale
/// √(σ_nσ_m) is irrational in general, and whether such an entry vanishes
/// does not depend on it.
struct GramMatrix {
  std::vector<GramIndex> indices;
  std::vector<std::vector<PiRational>> entries;
};

std::vector<GramIndex> basis_indices(const std::vector<JordanCell>& cells);

/// Throws ParamMismatch if the cells do not share params.
GramMatrix gram(const std::vector<JordanCell>& cells);

/// Rows (n,k), columns (m,l): ⟨⟨Ψ_{n,p_n−k−1}|H|Ψ_{m,l}⟩⟩ over the cells with
/// n ≤ n_max, with the same scaling convention as gram(). For fixed cells this
/// is π times the Jordan normal form of H.
GramMatrix jordan_matrix(const std::vector<JordanCell>& cells, int n_max);

/// π·δ_{nm}·δ_{k+l, p_n−1}.
PiRational expected_gram_entry(const GramIndex& row, const GramIndex& col, const std::vector<JordanCell>& cells);
/// π·(E_n·δ_{kl} + δ_{l,k+1}) within a cell, zero across cells.
PiRational expected_jordan_entry(const GramIndex& row, const GramIndex& col, const std::vector<JordanCell>& cells);

struct PatternMismatch {
  GramIndex row;
  GramIndex col;
  PiRational actual;
  PiRational expected;
};

std::vector<PatternMismatch> gram_mismatches(const GramMatrix& g, const std::vector<JordanCell>& cells);
std::vector<PatternMismatch> jordan_mismatches(const GramMatrix& j, const std::vector<JordanCell>& cells);

}  // namespace nhosc
