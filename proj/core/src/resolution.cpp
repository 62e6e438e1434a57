#include "modlink/resolution.hpp"

#include <numeric>

#include "modlink/error.hpp"

namespace modlink {

namespace {

// keep a minimal generating subset of the columns (greedy in degree order
// when graded; membership-based pruning otherwise)
ModuleMatrix prune_columns(const ModuleMatrix& S, const std::optional<Degrees>& row_degrees) {
  const QRingPtr& R = S.ring();
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < S.cols(); ++j) {
    bool z = true;
    for (std::size_t i = 0; i < S.rows(); ++i)
      if (!S.entry(i, j).is_zero()) z = false;
    if (!z) nonzero.push_back(j);
  }
  std::vector<std::size_t> all_rows(S.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  ModuleMatrix A = S.submatrix(all_rows, nonzero);

  std::optional<Degrees> cd;
  if (row_degrees && R->homogeneous()) cd = infer_col_degrees(A, *row_degrees);
  std::vector<std::size_t> order(A.cols());
  std::iota(order.begin(), order.end(), 0);
  if (cd)
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return (*cd)[a] < (*cd)[b]; });

  std::vector<std::size_t> kept;
  for (std::size_t j : order) {
    std::vector<VecPoly> basis;
    for (std::size_t k : kept) basis.push_back(A.column(k));
    if (kept.empty() || !qmodule_member(R, basis, A.rows(), A.column(j))) kept.push_back(j);
  }
  std::sort(kept.begin(), kept.end());
  return A.submatrix(all_rows, kept);
}

}  // namespace

FreeResolution free_resolution(const PresentedModule& M, std::size_t length) {
  require(length >= 2, "resolution length must be at least 2");
  MinimalizeResult min = minimalize(M);

  std::vector<ModuleMatrix> maps;
  std::vector<std::size_t> ranks;
  std::vector<std::optional<Degrees>> fdegs;

  ModuleMatrix d = min.module.relations();
  std::optional<Degrees> fdeg = min.module.degrees();
  ranks.push_back(d.rows());
  fdegs.push_back(fdeg);

  for (std::size_t step = 0; step < length; ++step) {
    maps.push_back(d);
    ranks.push_back(d.cols());
    std::optional<Degrees> next_deg;
    if (fdeg) next_deg = infer_col_degrees(d, *fdeg);
    fdegs.push_back(next_deg);
    if (step + 1 == length) break;

    ModuleMatrix S = syzygy_matrix(d, fdeg, nullptr);
    S = prune_columns(S, next_deg);
    d = S;
    fdeg = next_deg;
  }
  bool exact = min.module.minimality() == Minimality::Exact;
  return FreeResolution{min.module, std::move(maps), std::move(ranks), std::move(fdegs), exact};
}

bool resolution_is_exact(const FreeResolution& R) {
  for (std::size_t i = 0; i + 1 < R.maps.size(); ++i) {
    if (!R.maps[i].times(R.maps[i + 1]).is_zero()) return false;
    // syzygy completeness: every kernel generator of d_i is a combination
    // of the columns of d_{i+1}
    ModuleMatrix syz = syzygy_matrix(R.maps[i], std::nullopt, nullptr);
    auto next_cols = R.maps[i + 1].columns();
    for (std::size_t j = 0; j < syz.cols(); ++j) {
      if (!qmodule_member(R.maps[i].ring(), next_cols, R.maps[i].cols(), syz.column(j)))
        return false;
    }
  }
  return true;
}

}  // namespace modlink
