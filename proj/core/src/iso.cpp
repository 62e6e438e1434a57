#include "modlink/iso.hpp"

#include <random>

#include "modlink/error.hpp"

namespace modlink {

std::string IsoVerdict::label() const {
  switch (kind) {
    case Kind::Yes: return "Yes";
    case Kind::No: return "No(" + reason + ")";
    default: return "Inconclusive(" + std::to_string(trials) + ")";
  }
}

IsoVerdict IsoVerdict::make_yes(ModuleHom fwd, ModuleHom bwd) {
  IsoVerdict v;
  v.kind = Kind::Yes;
  v.fwd = std::move(fwd);
  v.bwd = std::move(bwd);
  return v;
}

IsoVerdict IsoVerdict::make_no(std::string reason) {
  IsoVerdict v;
  v.kind = Kind::No;
  v.reason = std::move(reason);
  return v;
}

IsoVerdict IsoVerdict::inconclusive(int trials) {
  IsoVerdict v;
  v.kind = Kind::Inconclusive;
  v.trials = trials;
  return v;
}

bool is_bijective(const ModuleHom& h) {
  if (!h.well_defined()) return false;
  if (!cokernel(h).is_zero()) return false;
  return kernel(h).module.is_zero();
}

namespace {

ModuleMatrix combine(const std::vector<ModuleMatrix>& basis, const std::vector<Fp>& coeffs,
                     const QRingPtr& R, std::size_t rows, std::size_t cols) {
  ModuleMatrix acc(R, rows, cols);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] == 0) continue;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        acc.set_entry(i, j, acc.entry(i, j) + basis[k].entry(i, j).scaled(coeffs[k]));
  }
  return acc;
}

}  // namespace

IsoVerdict is_isomorphic(const PresentedModule& M, const PresentedModule& N,
                         const SearchContext& ctx) {
  require(M.ring()->same_as(*N.ring()), "isomorphism test over different rings");
  const QRingPtr& R = M.ring();

  bool mz = M.is_zero(), nz = N.is_zero();
  if (mz && nz) {
    PresentedModule z = PresentedModule::zero_module(R);
    ModuleHom id(z, z, ModuleMatrix(R, 0, 0));
    return IsoVerdict::make_yes(id, id);
  }
  if (mz != nz) return IsoVerdict::make_no("zero against nonzero module");

  MinimalizeResult mm = minimalize(M);
  MinimalizeResult nn = minimalize(N);
  bool exact = mm.module.minimality() == Minimality::Exact &&
               nn.module.minimality() == Minimality::Exact;

  if (exact) {
    if (mm.module.gens() != nn.module.gens() ||
        mm.module.relations().cols() != nn.module.relations().cols())
      return IsoVerdict::make_no("betti mismatch");
  }

  HomModule hom_fwd = hom_module(mm.module, nn.module);
  HomModule hom_bwd = hom_module(nn.module, mm.module);
  if (hom_fwd.module.is_zero() || hom_bwd.module.is_zero())
    return IsoVerdict::make_no("Hom vanishes");

  auto degree_zero_subset = [](const HomModule& H) {
    std::vector<std::size_t> idx;
    if (H.basis_degrees) {
      for (std::size_t k = 0; k < H.basis.size(); ++k)
        if ((*H.basis_degrees)[k] == 0) idx.push_back(k);
    }
    if (idx.empty())
      for (std::size_t k = 0; k < H.basis.size(); ++k) idx.push_back(k);
    return idx;
  };
  std::vector<std::size_t> fwd_idx = degree_zero_subset(hom_fwd);
  std::vector<std::size_t> bwd_idx = degree_zero_subset(hom_bwd);

  auto accept = [&](const ModuleMatrix& F, const ModuleMatrix& B) -> std::optional<IsoVerdict> {
    ModuleHom f(mm.module, nn.module, F);
    ModuleHom b(nn.module, mm.module, B);
    if (!f.well_defined() || !b.well_defined()) return std::nullopt;
    if (!is_bijective(b.compose_after(f))) return std::nullopt;
    if (!is_bijective(f.compose_after(b))) return std::nullopt;
    // transport witnesses to the original presentations
    ModuleMatrix fw = nn.from_min.times(F.times(mm.to_min));
    ModuleMatrix bw = mm.from_min.times(B.times(nn.to_min));
    return IsoVerdict::make_yes(ModuleHom(M, N, fw), ModuleHom(N, M, bw));
  };

  for (std::size_t i : fwd_idx)
    for (std::size_t j : bwd_idx) {
      auto v = accept(hom_fwd.basis[i], hom_bwd.basis[j]);
      if (v) return *v;
    }

  std::mt19937_64 rng(ctx.seed);
  std::uint32_t p = R->ambient()->field().modulus();
  int tried = 0;
  for (int t = 0; t < ctx.trials; ++t) {
    std::vector<Fp> cf(hom_fwd.basis.size(), 0), cb(hom_bwd.basis.size(), 0);
    for (std::size_t k : fwd_idx) cf[k] = static_cast<Fp>(rng() % p);
    for (std::size_t k : bwd_idx) cb[k] = static_cast<Fp>(rng() % p);
    ModuleMatrix F = combine(hom_fwd.basis, cf, R, nn.module.gens(), mm.module.gens());
    ModuleMatrix B = combine(hom_bwd.basis, cb, R, mm.module.gens(), nn.module.gens());
    ++tried;
    auto v = accept(F, B);
    if (v) return *v;
  }
  return IsoVerdict::inconclusive(tried);
}

}  // namespace modlink
