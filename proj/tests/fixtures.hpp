#ifndef MODLINK_TESTS_FIXTURES_HPP
#define MODLINK_TESTS_FIXTURES_HPP

#include <random>

#include "modlink/linkage.hpp"

namespace fixtures {

using namespace modlink;

inline RingPtr plane() { return PolynomialRing::make(PrimeField(32003), {"x", "y"}); }
inline RingPtr space() { return PolynomialRing::make(PrimeField(32003), {"x", "y", "z"}); }
inline RingPtr line() { return PolynomialRing::make(PrimeField(32003), {"u"}); }

inline QRingPtr plane_free() { return QuotientRing::free(plane()); }

inline QRingPtr nodal() {
  RingPtr P = plane();
  return QuotientRing::make(P, Ideal(P, {P->parse("x*y")}));
}

inline QRingPtr coords3() {
  RingPtr P = space();
  return QuotientRing::make(P, Ideal(P, {P->parse("x*y*z")}));
}

inline QRingPtr line_free() { return QuotientRing::free(line()); }

inline PresentedModule cyclic(const QRingPtr& R, const std::string& gen_text) {
  return PresentedModule::cyclic(QuotIdeal(R, {R->ambient()->parse(gen_text)}));
}

inline PresentedModule module_of(const QRingPtr& R, const std::string& matrix_text) {
  ModuleMatrix rel = ModuleMatrix::parse(R, matrix_text);
  std::optional<Degrees> deg;
  if (R->homogeneous()) {
    Degrees d(rel.rows(), 0);
    if (infer_col_degrees(rel, d)) deg = d;
  }
  return PresentedModule(R, rel.rows(), rel, deg);
}

struct Fixture {
  std::string name;
  PresentedModule module;
  bool free;
};

// graded fixture modules over the three quotient rings plus the line
inline std::vector<Fixture> graded_suite() {
  QRingPtr P = plane_free();
  QRingPtr R = nodal();
  QRingPtr S = coords3();
  QRingPtr U = line_free();
  std::vector<Fixture> out;
  out.push_back({"plane free rank 2", PresentedModule::free_module(P, 2), true});
  out.push_back({"plane point", module_of(P, "[[x, y]]"), false});
  out.push_back({"plane column", module_of(P, "[[x],[y]]"), false});
  out.push_back({"nodal branch x", cyclic(R, "x"), false});
  out.push_back({"nodal branch y", cyclic(R, "y"), false});
  out.push_back({"nodal mixed", direct_sum(PresentedModule::free_module(R, 1), cyclic(R, "x")),
                 false});
  out.push_back({"nodal two branches", direct_sum(cyclic(R, "x"), cyclic(R, "y")), false});
  out.push_back({"nodal free", PresentedModule::free_module(R, 1), true});
  out.push_back({"coords branch", cyclic(S, "x"), false});
  out.push_back({"coords pair", cyclic(S, "x*y"), false});
  out.push_back({"line free", PresentedModule::free_module(U, 1), true});
  out.push_back({"line torsion", cyclic(U, "u"), false});
  return out;
}

// modules over the PID k[u]: free, torsion and mixed
inline std::vector<Fixture> line_suite() {
  QRingPtr U = line_free();
  std::vector<Fixture> out;
  out.push_back({"line free rank 1", PresentedModule::free_module(U, 1), true});
  out.push_back({"line free rank 2", PresentedModule::free_module(U, 2), true});
  out.push_back({"line torsion u", cyclic(U, "u"), false});
  out.push_back({"line torsion u^2", cyclic(U, "u^2"), false});
  out.push_back({"line mixed", direct_sum(cyclic(U, "u"), PresentedModule::free_module(U, 1)),
                 false});
  out.push_back({"line double torsion", direct_sum(cyclic(U, "u^2"), cyclic(U, "u")), false});
  return out;
}

// deterministic random polynomials for property tests
class Rand {
 public:
  explicit Rand(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }

  Polynomial poly(const RingPtr& R, int max_terms, std::uint32_t max_deg) {
    int nt = 1 + static_cast<int>(next() % static_cast<std::uint64_t>(max_terms));
    Polynomial acc = R->zero();
    for (int t = 0; t < nt; ++t) {
      Monomial m = Monomial::one(R->nvars());
      std::uint32_t budget = next() % (max_deg + 1);
      for (std::uint32_t d = 0; d < budget; ++d) m[next() % R->nvars()] += 1;
      Fp c = static_cast<Fp>(next() % R->field().modulus());
      acc = acc + R->monomial(c, m);
    }
    return acc;
  }

 private:
  std::mt19937_64 rng_;
};

inline const char* nodal_chain_session() {
  return R"(
field 32003
ring R1 vars x1 y1 order grevlex mod [x1*y1]
ring R2 vars x2 y2 order grevlex mod [x2*y2]
module M1 over R1 rel [[x1]]
module M2 over R2 rel [[y2]]
sheaf F
chart C1 ring R1 module M1
chart C2 ring R2 module M2
glue C1 C2 loc y1|x2 ringmap x1->0, y1->x2 inv x2->y1, y2->0 modmap [[1]]
)";
}

inline const char* projective_line_session() {
  return R"(
field 32003
ring RU vars u order grevlex
ring RV vars v order grevlex
module MU over RU rel [[]]
module MV over RV rel [[]]
sheaf O
chart CU ring RU module MU
chart CV ring RV module MV
glue CU CV loc u|v ringmap u->t inv v->t modmap [[1]]
sheaf TW
chart CU ring RU module MU
chart CV ring RV module MV
glue CU CV loc u|v ringmap u->t inv v->t modmap [[v]]
)";
}

}  // namespace fixtures

#endif
