#ifndef MODLINK_SHEAF_HPP
#define MODLINK_SHEAF_HPP

#include <string>
#include <vector>

#include "modlink/linkage.hpp"

namespace modlink {

/// Affine chart: U = Spec(ring) carrying the module of sections.
struct Chart {
  std::string name;
  QRingPtr ring;
  PresentedModule module;
};

/// Glueing datum for one overlap D(f_source) ≅ D(f_target): a ring
/// isomorphism of the localizations given on variables (with its declared
/// inverse) and an isomorphism of the localized modules over the target
/// side.
struct Transition {
  std::string source, target;
  Polynomial f_source;  // in the source chart ring
  Polynomial f_target;  // in the target chart ring
  // images of the source base variables inside the target localization
  std::vector<Polynomial> ring_images;
  // declared inverse: images of target base variables in the source localization
  std::vector<Polynomial> inverse_images;
  ModuleMatrix module_map;  // target module gens × source module gens
};

class GluedSheaf {
 public:
  GluedSheaf(std::vector<Chart> charts, std::vector<Transition> transitions);

  const std::vector<Chart>& charts() const { return charts_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  std::size_t chart_index(const std::string& name) const;
  const Chart& chart(const std::string& name) const;
  /// indices into transitions() of the declared overlap between the two
  /// charts, if any
  std::optional<std::size_t> find_transition(const std::string& a, const std::string& b) const;

  bool connected() const;

 private:
  std::vector<Chart> charts_;
  std::vector<Transition> transitions_;
};

struct SheafCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct ChartVerdict {
  std::string chart;
  std::string verdict;
  std::optional<LinkageReport> link;
};

struct SheafReport {
  std::string overall;  // Yes / No / Inconclusive
  std::vector<SheafCheck> checks;
  std::vector<ChartVerdict> chart_verdicts;
  std::optional<std::size_t> rank;  // common rank for locally free sheaves
  std::optional<std::pair<std::size_t, std::size_t>> corank;  // (t, k) after glueing

  bool all_checks_pass() const;
};

/// Connectivity, ring-map well-definedness and invertibility, module-map
/// bijectivity, and the cocycle condition on every declared triple overlap.
SheafReport validate_glueing(const GluedSheaf& S);

/// Sections over D(f) inside the named chart.
PresentedModule restrict_chart(const GluedSheaf& S, const std::string& chart,
                               const Polynomial& f);

/// Chart-wise operator with transitions induced by functoriality; a
/// transition that fails to stay an isomorphism raises an error naming the
/// overlap, since genuine sheaf data always transports.
GluedSheaf sheaf_lambda(const GluedSheaf& S, const SearchContext& ctx = {});
GluedSheaf sheaf_transpose(const GluedSheaf& S, const SearchContext& ctx = {});

/// Linkedness chart by chart; linkedness of the sheaf is a local property.
SheafReport sheaf_is_linked(const GluedSheaf& S, const SearchContext& ctx = {});

struct GlueResult {
  GluedSheaf sheaf;
  std::size_t t, k;  // common co-rank of the padded presentations
  SheafReport validation;
};

/// Pads every (individually linked) chart presentation to the common
/// co-rank and returns the validated glued sheaf.
GlueResult glue_linked(const std::vector<Chart>& charts,
                       const std::vector<Transition>& transitions,
                       const SearchContext& ctx = {});

/// Transpose vanishes on every chart; reports the common rank.
SheafReport sheaf_is_locally_free(const GluedSheaf& S);

struct SubsheafReport {
  bool found = false;
  std::optional<LinkedSubmodule> submodule;
  std::vector<SheafCheck> checks;
};

/// Linked subsheaf generated over one chart from an associated prime; the
/// witness pair must certify that the chart ring is not a domain.
SubsheafReport sheaf_has_linked_subsheaf(const GluedSheaf& S, const std::string& chart,
                                         const QuotIdeal& p, const ZeroDivisorWitness& w,
                                         const SearchContext& ctx = {});

}  // namespace modlink

#endif
