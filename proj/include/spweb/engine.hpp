// The evaluation engine: normal forms for ladder morphisms, exact evaluation
// of closed diagrams, and the annular trace.
#pragma once

#include <array>
#include <map>
#include <string>

#include "spweb/relations.hpp"

namespace spweb {

// Which redex is rewritten first.  Both strategies must produce equal
// values for closed diagrams; this is exercised by the verification suite.
enum class Strategy {
  LowestLeftmost,    // lowest redex, scanning bottom-up
  RightmostHighest,  // highest redex, scanning top-down
};

struct RunConfig {
  Strategy strategy = Strategy::LowestLeftmost;
  long long budget = 1'000'000;  // rewrite steps per evaluated term
  bool use_cache = true;
  int jobs = 1;
};

// A ladder is normal iff every rung is terminal and every E-rung lies below
// every F-rung.
bool is_pbw_normal(const Ladder& l);

// Rewrites every term to normal form.  Throws InternalDefect
// ("budget exceeded") when the per-term step budget runs out.
Morphism normalize_pbw(const Morphism& m, const RunConfig& cfg = {});

// Exact value of a closed morphism (all boundary labels 0).  Memoized
// globally (per strategy) unless cfg.use_cache is false; cfg.jobs > 1
// evaluates top-level terms in parallel.
QScalar evaluate_closed(const Morphism& m, const RunConfig& cfg = {});
void clear_eval_cache();

// Polynomial in the commuting trace variables x1, x2, x3.
class ChiPolynomial {
 public:
  using Monomial = std::array<int, 3>;  // exponents of x1, x2, x3

  void add(const Monomial& mono, const QScalar& c);
  const std::map<Monomial, QScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ChiPolynomial operator+(const ChiPolynomial& o) const;
  ChiPolynomial operator*(const ChiPolynomial& o) const;
  ChiPolynomial operator*(const QScalar& c) const;
  bool operator==(const ChiPolynomial& o) const = default;

  // Substitutes scalars for the three variables.
  QScalar substitute(const QScalar& x1, const QScalar& x2, const QScalar& x3) const;
  std::string str() const;

 private:
  std::map<Monomial, QScalar> terms_;
};

// Annular trace of an endomorphism (dom == cod exactly), as a polynomial in
// the variables x1, x2, x3 attached to the nonzero boundary labels.
ChiPolynomial trace_normalize(const Morphism& m, const RunConfig& cfg = {});

// ---- boundary lifting ------------------------------------------------------
//
// Distinct ladder presentations of the same web may disagree on boundary
// exponents, 0-labeled padding columns, and the positions of 0-labeled
// columns.  The lifted operations below reconcile such boundaries by
// shuffling nonzero labels to the left, padding with 0^(0) columns, raising
// exponents, and redistributing 0-mass, all of which are invisible on webs.

// f after g where cod(g) and dom(f) agree up to lifting; throws
// InvalidArgument("web boundary mismatch ...") when the nonzero labels
// disagree.
Morphism compose_lifted(const Morphism& f, const Morphism& g);

// Sum of morphisms whose boundaries agree up to lifting.
Morphism sum_lifted(const std::vector<std::pair<QScalar, Morphism>>& parts);

// Lifts a morphism whose domain and codomain agree up to lifting into an
// honest endomorphism (dom == cod), e.g. for trace_normalize.
Morphism make_endo(const Morphism& m);

// Tensor-factor identity morphism on the given objects with exponent 0.
Morphism identity_on_labels(const std::vector<int>& labels);

// Scalar pairing of two morphisms with opposite boundaries via a trace
// closure.  Declared here; defined with the closure templates (webs.cpp).
QScalar pair_closure(const Morphism& f, const Morphism& g,
                     const RunConfig& cfg = {});

}  // namespace spweb
