#ifndef MODLINK_PRESENTED_HPP
#define MODLINK_PRESENTED_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "modlink/module_gb.hpp"

namespace modlink {

using Degrees = std::vector<std::int64_t>;

/// Matrix over a quotient ring; every entry is stored as its own normal
/// form. Columns act as relations / images of free-module generators.
class ModuleMatrix {
 public:
  ModuleMatrix(QRingPtr ring, std::size_t rows, std::size_t cols);
  static ModuleMatrix from_rows(QRingPtr ring,
                                const std::vector<std::vector<Polynomial>>& rows);
  static ModuleMatrix from_columns(QRingPtr ring, std::size_t rows,
                                   const std::vector<VecPoly>& cols);
  static ModuleMatrix identity(QRingPtr ring, std::size_t n);

  const QRingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const Polynomial& f);

  VecPoly column(std::size_t j) const;
  std::vector<VecPoly> columns() const;

  ModuleMatrix transposed() const;
  ModuleMatrix times(const ModuleMatrix& o) const;
  bool is_zero() const;

  /// [this | o] side by side
  ModuleMatrix hcat(const ModuleMatrix& o) const;
  /// block-diagonal with o
  ModuleMatrix block_diag(const ModuleMatrix& o) const;
  ModuleMatrix submatrix(const std::vector<std::size_t>& keep_rows,
                         const std::vector<std::size_t>& keep_cols) const;

  /// `[[a, b],[c, d]]` rows-of-entries text form
  std::string to_text() const;
  static ModuleMatrix parse(const QRingPtr& ring, std::string_view text);

 private:
  QRingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> e_;  // row-major
};

/// Column degrees compatible with the given row degrees, or nullopt when
/// some entry is inhomogeneous / inconsistent. Zero columns get degree 0.
std::optional<Degrees> infer_col_degrees(const ModuleMatrix& A, const Degrees& row_degrees);

enum class Minimality { Unknown, Exact, Heuristic };

/// Finitely presented module over a quotient ring: coker of the relation
/// matrix on `gens` free generators, with optional generator degrees.
class PresentedModule {
 public:
  PresentedModule(QRingPtr ring, std::size_t gens, ModuleMatrix relations,
                  std::optional<Degrees> degrees = std::nullopt);

  static PresentedModule free_module(QRingPtr ring, std::size_t rank);
  static PresentedModule zero_module(QRingPtr ring);
  /// R / I as a cyclic module
  static PresentedModule cyclic(const QuotIdeal& I);

  const QRingPtr& ring() const { return ring_; }
  std::size_t gens() const { return gens_; }
  const ModuleMatrix& relations() const { return relations_; }
  const std::optional<Degrees>& degrees() const { return degrees_; }

  Minimality minimality() const { return minimality_; }
  void set_minimality(Minimality m) { minimality_ = m; }

  /// graded data present and consistent over a homogeneous ring
  bool graded() const;
  /// every generator lies in the span of the relations (exact test)
  bool is_zero() const;

 private:
  QRingPtr ring_;
  std::size_t gens_;
  ModuleMatrix relations_;
  std::optional<Degrees> degrees_;
  Minimality minimality_ = Minimality::Unknown;
};

/// ker(free map defined by A) as columns of a matrix with rows = A.cols.
ModuleMatrix syzygy_matrix(const ModuleMatrix& A, const std::optional<Degrees>& row_degrees,
                           std::optional<Degrees>* col_degrees_out);

struct MinimalizeResult {
  PresentedModule module;
  ModuleMatrix to_min;    // module.gens x input.gens, an isomorphism on cokers
  ModuleMatrix from_min;  // input.gens x module.gens, its inverse
};

/// Scalar-pivot elimination to a fixpoint, then zero and redundant relation
/// columns are pruned. Exact minimality for graded modules over homogeneous
/// rings; otherwise a constant-pivot heuristic (result flagged).
MinimalizeResult minimalize(const PresentedModule& M);

struct BettiPair {
  std::size_t b0, b1;
  bool exact;
};
BettiPair betti(const PresentedModule& M);

PresentedModule direct_sum(const PresentedModule& A, const PresentedModule& B);

struct Subquotient {
  PresentedModule module;  // span(U) / span(W)
  ModuleMatrix gens;       // columns of U, elements of the ambient free module
};

/// Presentation of span(U)/span(W) inside R^m; requires span(W) ⊆ span(U).
Subquotient subquotient(const QRingPtr& R, const ModuleMatrix& U, const ModuleMatrix& W,
                        const std::optional<Degrees>& ambient_degrees = std::nullopt);

/// Same presentation with entries re-reduced over the localized ring.
PresentedModule localize_module(const PresentedModule& M, const LocalizedRing& L);

struct LocalizedModule {
  LocalizedRing ring;
  PresentedModule module;
};
LocalizedModule localize_module(const PresentedModule& M, const Polynomial& f);

}  // namespace modlink

#endif
