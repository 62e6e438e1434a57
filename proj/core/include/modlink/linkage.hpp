#ifndef MODLINK_LINKAGE_HPP
#define MODLINK_LINKAGE_HPP

#include "modlink/iso.hpp"
#include "modlink/resolution.hpp"

namespace modlink {

enum class Tri { True, False, Unknown };
std::string tri_label(Tri t);

/// Cokernel of the transposed matrix, with dualized degree data; no
/// minimalization. Feeding a non-minimal presentation changes the result
/// only by free summands.
PresentedModule transpose_presentation(const ModuleMatrix& A,
                                       const std::optional<Degrees>& row_degrees);

/// Cokernel of the dual of the minimal presentation, minimalized.
PresentedModule transpose(const PresentedModule& M);

/// Cokernel of M* ↪ F0*, the first syzygy of the transpose, minimalized.
PresentedModule lambda_op(const PresentedModule& M);

/// Exactness of 0 → λM → F1* → Tr M → 0 for the minimal presentation.
bool verify_lambda_sequence(const PresentedModule& M);

struct StablePart {
  PresentedModule module;  // double transpose from minimal presentations
  std::size_t free_rank;   // generators stripped: M ≅ module ⊕ R^free_rank
};
StablePart stable_part(const PresentedModule& M);

/// No free direct summands: zero stripped rank, confirmed by isomorphism.
Tri is_stable(const PresentedModule& M, const SearchContext& ctx = {});

/// Tr M = 0; equivalently locally free / projective.
bool is_projective(const PresentedModule& M);

struct Evidence {
  std::string name;
  std::string value;
  std::optional<IsoVerdict> iso;
};

enum class LinkVerdict { Linked, NotLinked, Inconclusive };
std::string link_verdict_label(LinkVerdict v);

struct LinkageReport {
  LinkVerdict verdict = LinkVerdict::Inconclusive;
  std::vector<Evidence> evidence;
  std::optional<PresentedModule> partner_first;   // λ of the first argument
  std::optional<PresentedModule> partner_second;  // λ of the second argument
};

/// M ~ N when λM ≅ N and λN ≅ M; both checks run and are reported.
LinkageReport is_linked_pair(const PresentedModule& M, const PresentedModule& N,
                             const SearchContext& ctx = {});

/// Linked iff stable and torsionless; λλM ≅ M is reported as a cross-check.
LinkageReport is_linked_module(const PresentedModule& M, const SearchContext& ctx = {});

// --- ideal linkage ---------------------------------------------------------

/// x : I, the linkage partner of I over x; requires x ⊆ I.
QuotIdeal ideal_link_partner(const QuotIdeal& I, const QuotIdeal& x);

/// x : J = I and x : I = J, by reduced-basis identity.
bool verify_ideal_link(const QuotIdeal& I, const QuotIdeal& J, const QuotIdeal& x);

// --- associated primes and linked submodules --------------------------------

struct AssResult {
  bool member = false;
  std::optional<VecPoly> witness;  // element of M with annihilator exactly p
  bool primality_verified = false;  // structural check for variable-generated primes
};

/// p ∈ Ass(M): some hom R/p → M has image with annihilator exactly p.
AssResult ass_member(const QuotIdeal& p, const PresentedModule& M,
                     const SearchContext& ctx = {});

struct ZeroDivisorWitness {
  Polynomial f, g;  // fg = 0, f ≠ 0 ≠ g certifies a non-domain
};
bool verify_zero_divisor_pair(const QRingPtr& R, const ZeroDivisorWitness& w);

struct LinkedSubmodule {
  ModuleHom embedding;            // R/p ↪ M sending 1 to the Ass witness
  LinkageReport submodule_report; // is_linked_module(R/p)
  bool non_domain_verified = false;
};

/// The injective hom R/p → M through the Ass witness. Preconditions are
/// checked in order and failures name the failing clause.
LinkedSubmodule linked_submodule_from_prime(const QuotIdeal& p, const PresentedModule& M,
                                            const std::optional<ZeroDivisorWitness>& witness,
                                            const SearchContext& ctx = {});

struct MaximalLinkedReport {
  std::vector<std::size_t> linked;   // candidate indices passing is_linked_module
  std::vector<std::size_t> maximal;  // maximal under image containment
  struct PairStability {
    std::size_t a, b;
    Tri stable;  // is_stable(source_a ⊕ source_b)
  };
  std::vector<PairStability> pair_stability;
  std::string note;
};

/// Filters candidate embeddings by linkedness, orders images by containment,
/// and reports the maximal members plus pairwise stability of their sums.
MaximalLinkedReport maximal_linked_among(const std::vector<ModuleHom>& candidates,
                                         const SearchContext& ctx = {});

}  // namespace modlink

#endif
