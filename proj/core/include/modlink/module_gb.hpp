#ifndef MODLINK_MODULE_GB_HPP
#define MODLINK_MODULE_GB_HPP

#include <optional>
#include <vector>

#include "modlink/quotient.hpp"

namespace modlink {

/// Element of a free module P^rank over a polynomial ring; one coordinate
/// polynomial per slot. The module order is position-over-term with lower
/// slots larger.
using VecPoly = std::vector<Polynomial>;

VecPoly vp_zero(const RingPtr& ring, std::size_t rank);
bool vp_is_zero(const VecPoly& v);
VecPoly vp_add(const VecPoly& a, const VecPoly& b);
VecPoly vp_sub(const VecPoly& a, const VecPoly& b);
VecPoly vp_scale(const VecPoly& a, Fp c);
VecPoly vp_times_term(const VecPoly& a, Fp c, const Monomial& m);
bool vp_equal(const VecPoly& a, const VecPoly& b);

struct VpLead {
  std::size_t comp;
  Fp coeff;
  Monomial mono;
};

/// Lead of v under position-over-term; nullopt for the zero vector.
std::optional<VpLead> vp_lead(const VecPoly& v);

/// Reduced Groebner basis (monic, auto-reduced, sorted) of the submodule of
/// P^rank generated by `gens`.
std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens, const RingPtr& ring,
                                     std::size_t rank);

/// Remainder of v under division by G; no term divisible by a lead of G.
VecPoly module_normal_form(const VecPoly& v, const std::vector<VecPoly>& G,
                           const RingPtr& ring);

/// Generators of the syzygy module of `gens` inside P^{gens.size()}, from
/// the Schreyer construction: the basis is completed with every S-pair
/// reduction tracked, and each zero reduction contributes one syzygy.
std::vector<VecPoly> module_syzygies(const std::vector<VecPoly>& gens, const RingPtr& ring,
                                     std::size_t rank);

/// Coefficients x with Σ x_i·gens_i = target, or nullopt.
std::optional<std::vector<Polynomial>> module_lift(const std::vector<VecPoly>& gens,
                                                   const VecPoly& target, const RingPtr& ring,
                                                   std::size_t rank);

// --- submodules of R^rank for a quotient ring R = P/I ---------------------
// Computations run over P on the generators together with I-multiples of the
// slot basis; results are projected back and reduced.

std::vector<VecPoly> defining_block(const QRingPtr& R, std::size_t rank);

/// Canonical generators over R: reduced P-basis of gens + defining block,
/// with elements vanishing in R^rank dropped.
std::vector<VecPoly> qmodule_reduced_basis(const QRingPtr& R, const std::vector<VecPoly>& gens,
                                           std::size_t rank);

/// Generators of {v ∈ R^{gens.size()} : Σ v_i gens_i = 0 in R^rank}.
std::vector<VecPoly> qmodule_syzygies(const QRingPtr& R, const std::vector<VecPoly>& gens,
                                      std::size_t rank);

bool qmodule_member(const QRingPtr& R, const std::vector<VecPoly>& gens, std::size_t rank,
                    const VecPoly& v);

std::optional<std::vector<Polynomial>> qmodule_lift(const QRingPtr& R,
                                                    const std::vector<VecPoly>& gens,
                                                    std::size_t rank, const VecPoly& v);

}  // namespace modlink

#endif
