#ifndef MODLINK_ISO_HPP
#define MODLINK_ISO_HPP

#include <cstdint>
#include <string>

#include "modlink/hom.hpp"

namespace modlink {

/// Seed and trial budget for the randomized witness search; identical seeds
/// give identical verdicts.
struct SearchContext {
  std::uint64_t seed = 0;
  int trials = 64;
};

/// Three-valued isomorphism verdict. Yes carries a verified witness pair;
/// No carries a checkable invariant mismatch.
struct IsoVerdict {
  enum class Kind { Yes, No, Inconclusive };
  Kind kind = Kind::Inconclusive;
  std::string reason;  // for No
  int trials = 0;      // for Inconclusive
  std::optional<ModuleHom> fwd;  // M -> N
  std::optional<ModuleHom> bwd;  // N -> M

  bool yes() const { return kind == Kind::Yes; }
  bool no() const { return kind == Kind::No; }
  std::string label() const;

  static IsoVerdict make_yes(ModuleHom fwd, ModuleHom bwd);
  static IsoVerdict make_no(std::string reason);
  static IsoVerdict inconclusive(int trials);
};

/// Minimalize, compare Betti data, test Hom vanishing, then search for a
/// witness pair among basis homs and seeded random combinations. A verdict
/// of No is only produced from exact invariants.
IsoVerdict is_isomorphic(const PresentedModule& M, const PresentedModule& N,
                         const SearchContext& ctx = {});

/// h: X → X with zero kernel and cokernel.
bool is_bijective(const ModuleHom& h);

}  // namespace modlink

#endif
