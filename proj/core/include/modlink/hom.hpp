#ifndef MODLINK_HOM_HPP
#define MODLINK_HOM_HPP

#include "modlink/presented.hpp"

namespace modlink {

/// Map of presented modules, recorded on generators: column j of `matrix`
/// is the image of source generator j in the target's generator space.
class ModuleHom {
 public:
  ModuleHom(PresentedModule source, PresentedModule target, ModuleMatrix matrix);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const ModuleMatrix& matrix() const { return matrix_; }

  /// images of source relations land in the span of target relations
  bool well_defined() const;

  ModuleHom compose_after(const ModuleHom& first) const;  // this ∘ first

 private:
  PresentedModule source_, target_;
  ModuleMatrix matrix_;
};

PresentedModule cokernel(const ModuleHom& f);

struct KernelResult {
  PresentedModule module;
  ModuleMatrix inclusion;  // source.gens × module.gens, embeds kernel gens
};
KernelResult kernel(const ModuleHom& f);

struct HomModule {
  PresentedModule module;            // presentation of Hom(M, N)
  std::vector<ModuleMatrix> basis;   // generator k as a target×source matrix
  std::optional<Degrees> basis_degrees;  // degree of each basis hom when graded
};

/// Hom(M, N) via ker(Hom(F0, N) → Hom(F1, N)); every generator is
/// materialized as a ModuleHom matrix.
HomModule hom_module(const PresentedModule& M, const PresentedModule& N);

struct DualModule {
  PresentedModule module;     // M* = Hom(M, R)
  ModuleMatrix gens_in_free;  // M.gens × k: dual generators inside F0*
};
DualModule dual(const PresentedModule& M);

/// Contravariant map f*: target* → source* on the canonical dual
/// presentations.
ModuleHom dual_hom(const ModuleHom& f);

/// Same map of modules: equal shapes and the difference of matrices lands
/// in the span of the target relations, column by column.
bool homs_equal(const ModuleHom& a, const ModuleHom& b);

/// The evaluation M → M** built from the double-dual construction.
ModuleHom eval_to_double_dual(const PresentedModule& M);

/// kernel(eval) = 0; equivalently M embeds in a finite free module.
bool is_torsionless(const PresentedModule& M);

}  // namespace modlink

#endif
