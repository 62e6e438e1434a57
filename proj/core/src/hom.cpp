#include "modlink/hom.hpp"

#include "modlink/error.hpp"

namespace modlink {

ModuleHom::ModuleHom(PresentedModule source, PresentedModule target, ModuleMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  require(source_.ring()->same_as(*target_.ring()), "hom between modules over different rings");
  require(matrix_.rows() == target_.gens() && matrix_.cols() == source_.gens(),
          "hom matrix shape mismatch");
}

bool ModuleHom::well_defined() const {
  const QRingPtr& R = source_.ring();
  ModuleMatrix image = matrix_.times(source_.relations());
  auto target_cols = target_.relations().columns();
  for (std::size_t j = 0; j < image.cols(); ++j)
    if (!qmodule_member(R, target_cols, target_.gens(), image.column(j))) return false;
  return true;
}

ModuleHom ModuleHom::compose_after(const ModuleHom& first) const {
  require(first.target_.gens() == source_.gens(), "composition shape mismatch");
  return ModuleHom(first.source_, target_, matrix_.times(first.matrix_));
}

PresentedModule cokernel(const ModuleHom& f) {
  require(f.well_defined(), "cokernel of an ill-defined hom");
  const PresentedModule& N = f.target();
  ModuleMatrix rel = N.relations().hcat(f.matrix());
  std::optional<Degrees> deg = N.degrees();
  if (deg && !infer_col_degrees(rel, *deg)) deg = std::nullopt;
  return PresentedModule(N.ring(), N.gens(), rel, deg);
}

KernelResult kernel(const ModuleHom& f) {
  require(f.well_defined(), "kernel of an ill-defined hom");
  const QRingPtr& R = f.source().ring();
  const PresentedModule& M = f.source();
  const PresentedModule& N = f.target();

  // {X : F X ∈ span(target relations)}
  std::vector<VecPoly> stacked = f.matrix().columns();
  auto bcols = N.relations().columns();
  stacked.insert(stacked.end(), bcols.begin(), bcols.end());
  std::vector<VecPoly> syz = qmodule_syzygies(R, stacked, N.gens());
  std::vector<VecPoly> heads;
  for (const auto& s : syz) {
    VecPoly h(s.begin(), s.begin() + M.gens());
    if (!vp_is_zero(h)) heads.push_back(std::move(h));
  }
  heads = qmodule_reduced_basis(R, heads, M.gens());
  ModuleMatrix U = ModuleMatrix::from_columns(R, M.gens(), heads);

  Subquotient sq = subquotient(R, U, M.relations(), M.degrees());
  return KernelResult{std::move(sq.module), std::move(sq.gens)};
}

HomModule hom_module(const PresentedModule& M, const PresentedModule& N) {
  require(M.ring()->same_as(*N.ring()), "hom over different rings");
  const QRingPtr& R = M.ring();
  const RingPtr& P = R->ambient();

  const ModuleMatrix& A = M.relations();  // r x c
  const ModuleMatrix& B = N.relations();  // r' x c'
  std::size_t r = M.gens(), c = A.cols();
  std::size_t rp = N.gens(), cp = B.cols();
  std::size_t unknowns = r * rp;   // X[(i,s)] = coefficient of N-gen s in image of M-gen i
  std::size_t conditions = c * rp;

  // C X = (A^T ⊗ id) X must land in im(id_c ⊗ B)
  ModuleMatrix C(R, conditions, unknowns);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t s = 0; s < rp; ++s)
      for (std::size_t i = 0; i < r; ++i)
        C.set_entry(j * rp + s, i * rp + s, A.entry(i, j));
  ModuleMatrix D(R, conditions, c * cp);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t s = 0; s < rp; ++s)
      for (std::size_t u = 0; u < cp; ++u)
        D.set_entry(j * rp + s, j * cp + u, B.entry(s, u));

  std::vector<VecPoly> stacked = C.columns();
  auto dcols = D.columns();
  stacked.insert(stacked.end(), dcols.begin(), dcols.end());

  std::vector<VecPoly> heads;
  if (conditions == 0) {
    // no constraints: Hom(F0, N) entirely
    for (std::size_t k = 0; k < unknowns; ++k) {
      VecPoly e = vp_zero(P, unknowns);
      e[k] = P->one();
      heads.push_back(std::move(e));
    }
  } else {
    std::vector<VecPoly> syz = qmodule_syzygies(R, stacked, conditions);
    for (const auto& s : syz) {
      VecPoly h(s.begin(), s.begin() + unknowns);
      if (!vp_is_zero(h)) heads.push_back(std::move(h));
    }
    heads = qmodule_reduced_basis(R, heads, unknowns);
  }
  ModuleMatrix U = ModuleMatrix::from_columns(R, unknowns, heads);

  // homs vanishing in Hom(M, N): every image in im(B)
  ModuleMatrix W(R, unknowns, r * cp);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t s = 0; s < rp; ++s)
      for (std::size_t u = 0; u < cp; ++u)
        W.set_entry(i * rp + s, i * cp + u, B.entry(s, u));

  std::optional<Degrees> ambient_deg;
  if (M.degrees() && N.degrees() && R->homogeneous()) {
    Degrees amb(unknowns, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t s = 0; s < rp; ++s)
        amb[i * rp + s] = (*N.degrees())[s] - (*M.degrees())[i];
    ambient_deg = std::move(amb);
  }

  Subquotient sq = subquotient(R, U, W, ambient_deg);

  std::vector<ModuleMatrix> basis;
  for (std::size_t k = 0; k < U.cols(); ++k) {
    ModuleMatrix H(R, rp, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t s = 0; s < rp; ++s) H.set_entry(s, i, U.entry(i * rp + s, k));
    basis.push_back(std::move(H));
  }
  std::optional<Degrees> bdeg = sq.module.degrees();
  return HomModule{std::move(sq.module), std::move(basis), std::move(bdeg)};
}

DualModule dual(const PresentedModule& M) {
  HomModule H = hom_module(M, PresentedModule::free_module(M.ring(), 1));
  ModuleMatrix K(M.ring(), M.gens(), H.basis.size());
  for (std::size_t k = 0; k < H.basis.size(); ++k)
    for (std::size_t i = 0; i < M.gens(); ++i) K.set_entry(i, k, H.basis[k].entry(0, i));
  return DualModule{std::move(H.module), std::move(K)};
}

ModuleHom dual_hom(const ModuleHom& f) {
  const QRingPtr& R = f.source().ring();
  DualModule ds = dual(f.source());
  DualModule dt = dual(f.target());
  // φ ∈ target* pulls back to φ∘f, expressed in the source-dual generators
  ModuleMatrix pulled = f.matrix().transposed().times(dt.gens_in_free);
  auto src_cols = ds.gens_in_free.columns();
  ModuleMatrix E(R, ds.module.gens(), dt.module.gens());
  for (std::size_t k = 0; k < pulled.cols(); ++k) {
    auto x = qmodule_lift(R, src_cols, f.source().gens(), pulled.column(k));
    require(x.has_value(), "pulled-back functional escapes the dual module");
    for (std::size_t i = 0; i < x->size(); ++i) E.set_entry(i, k, (*x)[i]);
  }
  return ModuleHom(dt.module, ds.module, E);
}

bool homs_equal(const ModuleHom& a, const ModuleHom& b) {
  if (a.matrix().rows() != b.matrix().rows() || a.matrix().cols() != b.matrix().cols())
    return false;
  const QRingPtr& R = a.target().ring();
  auto rel = a.target().relations().columns();
  for (std::size_t j = 0; j < a.matrix().cols(); ++j) {
    VecPoly diff = vp_sub(a.matrix().column(j), b.matrix().column(j));
    for (auto& f : diff) f = R->reduce(f);
    if (vp_is_zero(diff)) continue;
    if (!qmodule_member(R, rel, a.target().gens(), diff)) return false;
  }
  return true;
}

ModuleHom eval_to_double_dual(const PresentedModule& M) {
  const QRingPtr& R = M.ring();
  DualModule star = dual(M);
  DualModule dstar = dual(star.module);

  // ev_i is functional "value at generator i": the i-th row of the dual
  // generator matrix, expressed in the generators of M**
  const ModuleMatrix& K = star.gens_in_free;     // M.gens × k
  const ModuleMatrix& K2 = dstar.gens_in_free;   // k × k2
  ModuleMatrix E(R, dstar.module.gens(), M.gens());
  auto k2cols = K2.columns();
  for (std::size_t i = 0; i < M.gens(); ++i) {
    VecPoly row;
    for (std::size_t j = 0; j < K.cols(); ++j) row.push_back(K.entry(i, j));
    auto x = qmodule_lift(R, k2cols, K.cols(), row);
    require(x.has_value(), "evaluation row escapes the double dual");
    for (std::size_t s = 0; s < x->size(); ++s) E.set_entry(s, i, (*x)[s]);
  }
  return ModuleHom(M, dstar.module, E);
}

bool is_torsionless(const PresentedModule& M) {
  if (M.is_zero()) return true;
  return kernel(eval_to_double_dual(M)).module.is_zero();
}

}  // namespace modlink
