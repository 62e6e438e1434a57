#include "modlink/presented.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "modlink/error.hpp"

namespace modlink {

ModuleMatrix::ModuleMatrix(QRingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  require(ring_ != nullptr, "matrix needs a ring");
  e_.assign(rows_ * cols_, ring_->ambient()->zero());
}

ModuleMatrix ModuleMatrix::from_rows(QRingPtr ring,
                                     const std::vector<std::vector<Polynomial>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  ModuleMatrix A(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    require(rows[i].size() == c, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) A.set_entry(i, j, rows[i][j]);
  }
  return A;
}

ModuleMatrix ModuleMatrix::from_columns(QRingPtr ring, std::size_t rows,
                                        const std::vector<VecPoly>& cols) {
  ModuleMatrix A(ring, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == rows, "column rank mismatch");
    for (std::size_t i = 0; i < rows; ++i) A.set_entry(i, j, cols[j][i]);
  }
  return A;
}

ModuleMatrix ModuleMatrix::identity(QRingPtr ring, std::size_t n) {
  ModuleMatrix A(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) A.set_entry(i, i, ring->ambient()->one());
  return A;
}

const Polynomial& ModuleMatrix::entry(std::size_t i, std::size_t j) const {
  require(i < rows_ && j < cols_, "matrix index out of range");
  return e_[i * cols_ + j];
}

void ModuleMatrix::set_entry(std::size_t i, std::size_t j, const Polynomial& f) {
  require(i < rows_ && j < cols_, "matrix index out of range");
  e_[i * cols_ + j] = ring_->reduce(f);
}

VecPoly ModuleMatrix::column(std::size_t j) const {
  VecPoly v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(entry(i, j));
  return v;
}

std::vector<VecPoly> ModuleMatrix::columns() const {
  std::vector<VecPoly> cs;
  for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
  return cs;
}

ModuleMatrix ModuleMatrix::transposed() const {
  ModuleMatrix T(ring_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T.set_entry(j, i, entry(i, j));
  return T;
}

ModuleMatrix ModuleMatrix::times(const ModuleMatrix& o) const {
  require(ring_->same_as(*o.ring_), "matrix product over different rings");
  require(cols_ == o.rows_, "matrix product shape mismatch");
  ModuleMatrix P(ring_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) {
      Polynomial s = ring_->ambient()->zero();
      for (std::size_t k = 0; k < cols_; ++k) s = s + entry(i, k) * o.entry(k, j);
      P.set_entry(i, j, s);
    }
  return P;
}

bool ModuleMatrix::is_zero() const {
  for (const auto& f : e_)
    if (!f.is_zero()) return false;
  return true;
}

ModuleMatrix ModuleMatrix::hcat(const ModuleMatrix& o) const {
  require(rows_ == o.rows_, "hcat row mismatch");
  ModuleMatrix A(ring_, rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) A.set_entry(i, j, entry(i, j));
    for (std::size_t j = 0; j < o.cols_; ++j) A.set_entry(i, cols_ + j, o.entry(i, j));
  }
  return A;
}

ModuleMatrix ModuleMatrix::block_diag(const ModuleMatrix& o) const {
  ModuleMatrix A(ring_, rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) A.set_entry(i, j, entry(i, j));
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) A.set_entry(rows_ + i, cols_ + j, o.entry(i, j));
  return A;
}

ModuleMatrix ModuleMatrix::submatrix(const std::vector<std::size_t>& keep_rows,
                                     const std::vector<std::size_t>& keep_cols) const {
  ModuleMatrix A(ring_, keep_rows.size(), keep_cols.size());
  for (std::size_t i = 0; i < keep_rows.size(); ++i)
    for (std::size_t j = 0; j < keep_cols.size(); ++j)
      A.set_entry(i, j, entry(keep_rows[i], keep_cols[j]));
  return A;
}

std::string ModuleMatrix::to_text() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ",";
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << entry(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

ModuleMatrix ModuleMatrix::parse(const QRingPtr& ring, std::string_view text) {
  // rows in brackets, entries comma separated: [[a, b],[c, d]]
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    require(pos < text.size() && text[pos] == c,
            std::string("matrix text: expected '") + c + "'");
    ++pos;
  };
  expect('[');
  std::vector<std::vector<Polynomial>> rows;
  skip_ws();
  while (pos < text.size() && text[pos] != ']') {
    expect('[');
    std::vector<Polynomial> row;
    skip_ws();
    std::size_t entry_start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == ']' && depth == 0) break;
      if ((c == ',') && depth == 0) {
        row.push_back(ring->parse(text.substr(entry_start, pos - entry_start)));
        ++pos;
        entry_start = pos;
        continue;
      }
      if (c == '(') ++depth;
      if (c == ')') --depth;
      ++pos;
    }
    std::string_view last = text.substr(entry_start, pos - entry_start);
    bool blank = true;
    for (char c : last)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank || !row.empty()) row.push_back(ring->parse(last));
    expect(']');
    rows.push_back(std::move(row));
    skip_ws();
    if (pos < text.size() && text[pos] == ',') ++pos;
    skip_ws();
  }
  expect(']');
  skip_ws();
  require(pos >= text.size(), "matrix text: trailing characters");
  return from_rows(ring, rows);
}

std::optional<Degrees> infer_col_degrees(const ModuleMatrix& A, const Degrees& row_degrees) {
  require(row_degrees.size() == A.rows(), "one degree per row");
  Degrees cd(A.cols(), 0);
  for (std::size_t j = 0; j < A.cols(); ++j) {
    std::optional<std::int64_t> deg;
    for (std::size_t i = 0; i < A.rows(); ++i) {
      const Polynomial& f = A.entry(i, j);
      if (f.is_zero()) continue;
      if (!f.is_homogeneous()) return std::nullopt;
      std::int64_t d = f.degree() + row_degrees[i];
      if (deg && *deg != d) return std::nullopt;
      deg = d;
    }
    cd[j] = deg.value_or(0);
  }
  return cd;
}

PresentedModule::PresentedModule(QRingPtr ring, std::size_t gens, ModuleMatrix relations,
                                 std::optional<Degrees> degrees)
    : ring_(std::move(ring)), gens_(gens), relations_(std::move(relations)),
      degrees_(std::move(degrees)) {
  require(relations_.rows() == gens_, "relation rows must equal generator count");
  require(relations_.ring()->same_as(*ring_), "relations over a different ring");
  if (degrees_) require(degrees_->size() == gens_, "one degree per generator");
}

PresentedModule PresentedModule::free_module(QRingPtr ring, std::size_t rank) {
  ModuleMatrix none(ring, rank, 0);
  std::optional<Degrees> deg;
  if (ring->homogeneous()) deg = Degrees(rank, 0);
  PresentedModule M(ring, rank, none, deg);
  M.set_minimality(Minimality::Exact);
  return M;
}

PresentedModule PresentedModule::zero_module(QRingPtr ring) {
  return free_module(std::move(ring), 0);
}

PresentedModule PresentedModule::cyclic(const QuotIdeal& I) {
  const QRingPtr& R = I.ring();
  std::vector<Polynomial> gens = I.reduced_gens();
  ModuleMatrix rel(R, 1, gens.size());
  bool homog = R->homogeneous();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    rel.set_entry(0, j, gens[j]);
    if (!gens[j].is_homogeneous()) homog = false;
  }
  std::optional<Degrees> deg;
  if (homog) deg = Degrees{0};
  return PresentedModule(R, 1, rel, deg);
}

bool PresentedModule::graded() const {
  if (!ring_->homogeneous() || !degrees_) return false;
  return infer_col_degrees(relations_, *degrees_).has_value();
}

bool PresentedModule::is_zero() const {
  if (gens_ == 0) return true;
  auto cols = relations_.columns();
  const RingPtr& P = ring_->ambient();
  for (std::size_t i = 0; i < gens_; ++i) {
    VecPoly e = vp_zero(P, gens_);
    e[i] = P->one();
    if (!qmodule_member(ring_, cols, gens_, e)) return false;
  }
  return true;
}

ModuleMatrix syzygy_matrix(const ModuleMatrix& A, const std::optional<Degrees>& row_degrees,
                           std::optional<Degrees>* col_degrees_out) {
  const QRingPtr& R = A.ring();
  std::vector<VecPoly> syz = qmodule_syzygies(R, A.columns(), A.rows());
  ModuleMatrix S = ModuleMatrix::from_columns(R, A.cols(), syz);
  if (col_degrees_out) {
    *col_degrees_out = std::nullopt;
    if (row_degrees && R->homogeneous()) {
      auto cd = infer_col_degrees(A, *row_degrees);
      if (cd) *col_degrees_out = infer_col_degrees(S, *cd);
    }
  }
  return S;
}

namespace {

// first (i, j) whose entry is a nonzero constant
std::optional<std::pair<std::size_t, std::size_t>> find_scalar_pivot(const ModuleMatrix& A) {
  for (std::size_t j = 0; j < A.cols(); ++j)
    for (std::size_t i = 0; i < A.rows(); ++i) {
      auto c = A.entry(i, j).constant_value();
      if (c && *c != 0) return std::make_pair(i, j);
    }
  return std::nullopt;
}

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) v.push_back(i);
  return v;
}

}  // namespace

MinimalizeResult minimalize(const PresentedModule& M) {
  const QRingPtr& R = M.ring();
  const RingPtr& P = R->ambient();
  bool exact = M.graded() || M.gens() == 0;

  ModuleMatrix A = M.relations();
  std::optional<Degrees> deg = M.degrees();
  ModuleMatrix to_min = ModuleMatrix::identity(R, M.gens());
  ModuleMatrix from_min = ModuleMatrix::identity(R, M.gens());

  while (true) {
    auto piv = find_scalar_pivot(A);
    if (!piv) break;
    auto [pi, pj] = *piv;
    Fp c = *A.entry(pi, pj).constant_value();
    Fp cinv = P->field().inv(c);

    // clear row pi from the other columns
    for (std::size_t j = 0; j < A.cols(); ++j) {
      if (j == pj) continue;
      Polynomial factor = A.entry(pi, j).scaled(cinv);
      if (factor.is_zero()) continue;
      for (std::size_t i = 0; i < A.rows(); ++i)
        A.set_entry(i, j, A.entry(i, j) - factor * A.entry(i, pj));
    }

    // projection step: gen pi maps to -cinv * sum_{k != pi} A[k][pj] gen_k
    std::size_t n = A.rows();
    ModuleMatrix step(R, n - 1, n);
    std::size_t row = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == pi) continue;
      step.set_entry(row, k, P->one());
      step.set_entry(row, pi, A.entry(k, pj).scaled(P->field().neg(cinv)));
      ++row;
    }
    ModuleMatrix incl(R, n, n - 1);
    row = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == pi) continue;
      incl.set_entry(k, row, P->one());
      ++row;
    }
    to_min = step.times(to_min);
    from_min = from_min.times(incl);

    A = A.submatrix(all_but(n, pi), all_but(A.cols(), pj));
    if (deg) deg->erase(deg->begin() + static_cast<std::ptrdiff_t>(pi));
  }

  // drop zero columns, then prune columns lying in the span of the kept rest
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    bool z = true;
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (!A.entry(i, j).is_zero()) z = false;
    if (!z) nonzero.push_back(j);
  }
  std::vector<std::size_t> all_rows(A.rows());
  std::iota(all_rows.begin(), all_rows.end(), 0);
  A = A.submatrix(all_rows, nonzero);

  std::optional<Degrees> cd;
  if (deg) cd = infer_col_degrees(A, *deg);
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
  A = A.submatrix(all_rows, kept);

  PresentedModule out(R, A.rows(), A, deg);
  out.set_minimality(exact ? Minimality::Exact : Minimality::Heuristic);
  return MinimalizeResult{std::move(out), std::move(to_min), std::move(from_min)};
}

BettiPair betti(const PresentedModule& M) {
  MinimalizeResult r = minimalize(M);
  return BettiPair{r.module.gens(), r.module.relations().cols(),
                   r.module.minimality() == Minimality::Exact};
}

PresentedModule direct_sum(const PresentedModule& A, const PresentedModule& B) {
  require(A.ring()->same_as(*B.ring()), "direct sum over different rings");
  ModuleMatrix rel = A.relations().block_diag(B.relations());
  std::optional<Degrees> deg;
  if (A.degrees() && B.degrees()) {
    deg = *A.degrees();
    deg->insert(deg->end(), B.degrees()->begin(), B.degrees()->end());
  }
  return PresentedModule(A.ring(), A.gens() + B.gens(), rel, deg);
}

Subquotient subquotient(const QRingPtr& R, const ModuleMatrix& U, const ModuleMatrix& W,
                        const std::optional<Degrees>& ambient_degrees) {
  require(U.rows() == W.rows(), "subquotient: ambient rank mismatch");
  std::vector<VecPoly> stacked = U.columns();
  auto wc = W.columns();
  stacked.insert(stacked.end(), wc.begin(), wc.end());
  std::vector<VecPoly> syz = qmodule_syzygies(R, stacked, U.rows());
  std::vector<VecPoly> rel_cols;
  for (const auto& s : syz) {
    VecPoly head(s.begin(), s.begin() + U.cols());
    if (!vp_is_zero(head)) rel_cols.push_back(std::move(head));
  }
  rel_cols = qmodule_reduced_basis(R, rel_cols, U.cols());
  ModuleMatrix rel = ModuleMatrix::from_columns(R, U.cols(), rel_cols);

  std::optional<Degrees> deg;
  if (ambient_degrees && R->homogeneous()) deg = infer_col_degrees(U, *ambient_degrees);
  PresentedModule module(R, U.cols(), rel, deg);
  return Subquotient{std::move(module), U};
}

PresentedModule localize_module(const PresentedModule& M, const LocalizedRing& L) {
  require(M.ring()->same_as(*L.base), "module not over the localization base");
  const QRingPtr& Q = L.presentation;
  ModuleMatrix rel(Q, M.gens(), M.relations().cols());
  for (std::size_t i = 0; i < rel.rows(); ++i)
    for (std::size_t j = 0; j < rel.cols(); ++j)
      rel.set_entry(i, j, L.lift(M.relations().entry(i, j)));
  return PresentedModule(Q, M.gens(), rel, std::nullopt);
}

LocalizedModule localize_module(const PresentedModule& M, const Polynomial& f) {
  LocalizedRing L = localize_ring(M.ring(), f);
  PresentedModule loc = localize_module(M, L);
  return LocalizedModule{std::move(L), std::move(loc)};
}

}  // namespace modlink
