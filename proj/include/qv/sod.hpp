#pragma once

// Vanishing verdicts for equivariant bundles and the question-level
// semiorthogonality checks built from them. Evidence rules are applied in
// a fixed order (Teleman, Serre partner, Euler characteristic) so that
// evidence lists are reproducible; Inconclusive is a value, not an error.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qv/betti.hpp"
#include "qv/chow.hpp"
#include "qv/teleman.hpp"

namespace qv {

enum class Tri { Vanishes, Nonzero, Inconclusive };
enum class Answer { Positive, Negative, Inconclusive };

std::string to_string(Tri t);
std::string to_string(Answer a);

struct Evidence {
  enum class Rule { TelemanDirect, SerrePartner, ChiZero, ChiNonzero };
  Rule rule;
  std::string target;  // "H>=1", "H0" or "all"
  std::string note;
};

std::string to_string(Evidence::Rule r);

struct VanishingVerdict {
  BundleExpr bundle;
  Tri h0 = Tri::Inconclusive;
  Tri hge1 = Tri::Inconclusive;
  Tri all_k = Tri::Inconclusive;
  std::optional<Zint> chi;
  std::vector<Evidence> evidence;
};

struct QuestionVerdict {
  std::string question;  // "A", "B", "C", "TheoremD"
  Answer answer = Answer::Inconclusive;
  long long predicted_collection_length = 0;
  long long hh0 = 0;
  std::vector<VanishingVerdict> bundles;     // all-degree requirements
  std::vector<VanishingVerdict> h1_bundles;  // H^{>=1}-only requirements
  std::string note;
};

// Shared computation context for one (Q, d, theta, a): caches strata, the
// Hodge data and the (expensive) Chow presentation, which is only built
// when an Euler characteristic is actually needed.
class SodContext {
 public:
  SodContext(const Quiver& q, DimVec d, Stability theta, Linearisation a,
             bool allow_chow = true, bool parallel = true);

  const Quiver& quiver() const { return q_; }
  const DimVec& dims() const { return d_; }
  const Stability& stability() const { return theta_; }
  const Linearisation& linearisation() const { return a_; }
  long long index() const { return r_; }
  int dim() const { return dim_; }
  const std::vector<StratumWeights>& strata() const { return strata_; }

  long long hh0();
  const ChowPresentation& chow();
  bool chow_allowed() const { return allow_chow_; }

  Zint chi(const BundleExpr& f);
  bool teleman_ok(const BundleExpr& f);

  VanishingVerdict vanishing_verdict(const BundleExpr& f);

 private:
  Quiver q_;
  DimVec d_;
  Stability theta_;
  Linearisation a_;
  long long r_;
  int dim_;
  bool allow_chow_;
  bool parallel_;
  std::vector<StratumWeights> strata_;
  std::optional<long long> hh0_;
  std::unique_ptr<ChowPresentation> chow_;
  std::map<std::string, VanishingVerdict> verdict_cache_;
  std::map<std::string, Zint> chi_cache_;
};

QuestionVerdict question_a(SodContext& ctx);
QuestionVerdict question_b(SodContext& ctx);
QuestionVerdict question_c(SodContext& ctx);

// H^0(U_i^dual) = 0 for the m-Kronecker quiver with d = (2,3) at the
// canonical stability; decided through the verdict chain.
Tri mkronecker_h0_condition(int m, const Linearisation& a, bool parallel = true);

}  // namespace qv
