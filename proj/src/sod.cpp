#include "qv/sod.hpp"

#include <algorithm>
#include <stdexcept>

namespace qv {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Vanishes: return "vanishes";
    case Tri::Nonzero: return "nonzero";
    default: return "inconclusive";
  }
}

std::string to_string(Answer a) {
  switch (a) {
    case Answer::Positive: return "Positive";
    case Answer::Negative: return "Negative";
    default: return "Inconclusive";
  }
}

std::string to_string(Evidence::Rule r) {
  switch (r) {
    case Evidence::Rule::TelemanDirect: return "TelemanDirect";
    case Evidence::Rule::SerrePartner: return "SerrePartner";
    case Evidence::Rule::ChiZero: return "ChiZero";
    default: return "ChiNonzero";
  }
}

SodContext::SodContext(const Quiver& q, DimVec d, Stability theta, Linearisation a,
                       bool allow_chow, bool parallel)
    : q_(q),
      d_(std::move(d)),
      theta_(std::move(theta)),
      a_(std::move(a)),
      allow_chow_(allow_chow),
      parallel_(parallel) {
  AssumptionReport rep = check_assumptions(q_, d_, theta_);
  if (!rep.all()) {
    std::string which = !rep.acyclic ? "acyclicity"
                        : !rep.coprime ? "coprimality"
                                       : "strong ample stability";
    throw std::invalid_argument("assumption violated: " + which);
  }
  long long pairing = 0;
  for (size_t i = 0; i < a_.size(); ++i) pairing += a_[i] * d_[i];
  if (pairing != 1) throw std::invalid_argument("linearisation does not satisfy a . d = 1");
  r_ = fano_index(q_, d_);
  dim_ = moduli_dimension(q_, d_);
  strata_ = stratum_weights_all(q_, d_, theta_);
}

long long SodContext::hh0() {
  if (!hh0_) hh0_ = hochschild_zero(q_, d_, theta_);
  return *hh0_;
}

const ChowPresentation& SodContext::chow() {
  if (!allow_chow_) throw std::logic_error("Chow computations disabled in this context");
  if (!chow_) chow_ = std::make_unique<ChowPresentation>(q_, d_, theta_, a_, parallel_);
  return *chow_;
}

Zint SodContext::chi(const BundleExpr& f) {
  std::string key = to_string(f);
  auto it = chi_cache_.find(key);
  if (it != chi_cache_.end()) return it->second;
  Zint value = chow().euler_characteristic(f);
  chi_cache_.emplace(std::move(key), value);
  return value;
}

bool SodContext::teleman_ok(const BundleExpr& f) {
  return teleman_report(q_, strata_, f, a_).all_satisfied;
}

VanishingVerdict SodContext::vanishing_verdict(const BundleExpr& f) {
  std::string key = to_string(f);
  auto cached = verdict_cache_.find(key);
  if (cached != verdict_cache_.end()) return cached->second;

  VanishingVerdict v;
  v.bundle = f;

  // Rule 1: Teleman quantization on every unstable stratum.
  if (teleman_ok(f)) {
    v.hge1 = Tri::Vanishes;
    v.evidence.push_back({Evidence::Rule::TelemanDirect, "H>=1",
                          "Teleman inequality holds on all strata"});
  }

  // Rule 2: Serre partner F^dual (x) omega.
  BundleExpr partner = serre_partner(f, q_, d_);
  if (dim_ >= 1 && teleman_ok(partner)) {
    v.h0 = Tri::Vanishes;
    v.evidence.push_back({Evidence::Rule::SerrePartner, "H0",
                          "Teleman holds for partner " + to_string(partner)});
    if (v.hge1 != Tri::Vanishes && allow_chow_ && chi(partner).is_zero()) {
      // Partner vanishes in all degrees, hence so does f.
      v.hge1 = Tri::Vanishes;
      v.evidence.push_back({Evidence::Rule::SerrePartner, "all",
                            "partner " + to_string(partner) +
                                " vanishes in all degrees (Teleman + chi = 0)"});
    }
  }

  // Rule 3: Euler characteristic, once higher cohomology is gone.
  if (v.hge1 == Tri::Vanishes && v.h0 == Tri::Inconclusive && allow_chow_) {
    Zint c = chi(f);
    v.chi = c;
    if (c.is_zero()) {
      v.h0 = Tri::Vanishes;
      v.evidence.push_back({Evidence::Rule::ChiZero, "H0", "chi = 0 with vanishing H>=1"});
    } else {
      v.h0 = Tri::Nonzero;
      v.evidence.push_back(
          {Evidence::Rule::ChiNonzero, "H0", "chi = " + c.str() + " with vanishing H>=1"});
    }
  }

  if (v.h0 == Tri::Vanishes && v.hge1 == Tri::Vanishes) {
    v.all_k = Tri::Vanishes;
  } else if (v.h0 == Tri::Nonzero || v.hge1 == Tri::Nonzero) {
    v.all_k = Tri::Nonzero;
  } else {
    v.all_k = Tri::Inconclusive;
  }

  verdict_cache_.emplace(std::move(key), v);
  return v;
}

namespace {

Answer fold_answers(const std::vector<VanishingVerdict>& all_k,
                    const std::vector<VanishingVerdict>& h1_only) {
  bool nonzero = false, inconclusive = false;
  for (const auto& v : all_k) {
    if (v.all_k == Tri::Nonzero) nonzero = true;
    if (v.all_k == Tri::Inconclusive) inconclusive = true;
  }
  for (const auto& v : h1_only) {
    if (v.hge1 == Tri::Nonzero) nonzero = true;
    if (v.hge1 == Tri::Inconclusive) inconclusive = true;
  }
  if (nonzero) return Answer::Negative;
  if (inconclusive) return Answer::Inconclusive;
  return Answer::Positive;
}

}  // namespace

QuestionVerdict question_a(SodContext& ctx) {
  QuestionVerdict qv;
  qv.question = "A";
  qv.hh0 = ctx.hh0();
  const int n = ctx.quiver().vertex_count();
  qv.predicted_collection_length = n + 1;

  for (int i = 1; i <= n; ++i) qv.bundles.push_back(ctx.vanishing_verdict(bundle_Udual(i)));

  if (qv.predicted_collection_length > qv.hh0) {
    qv.answer = Answer::Negative;
    qv.note = "Hochschild obstruction: collection length " +
              std::to_string(qv.predicted_collection_length) + " exceeds dim HH_0 = " +
              std::to_string(qv.hh0);
    return qv;
  }
  qv.answer = fold_answers(qv.bundles, {});
  return qv;
}

QuestionVerdict question_b(SodContext& ctx) {
  const long long r = ctx.index();
  if (r == 1) {
    QuestionVerdict qv = question_a(ctx);
    qv.question = "B";
    qv.note = qv.note.empty() ? "index 1: coincides with question A" : qv.note;
    return qv;
  }

  QuestionVerdict qv;
  qv.question = "B";
  qv.hh0 = ctx.hh0();
  const int n = ctx.quiver().vertex_count();
  qv.predicted_collection_length = r * (n + 1);

  const Quiver& q = ctx.quiver();
  const DimVec& d = ctx.dims();
  for (long long s = 1; s <= r - 1; ++s) {
    BundleExpr twist = bundle_OH(q, d, -s);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        qv.bundles.push_back(ctx.vanishing_verdict(bundle_Udual(i) * bundle_U(j) * twist));
    qv.bundles.push_back(ctx.vanishing_verdict(twist));
    for (int i = 1; i <= n; ++i)
      qv.bundles.push_back(ctx.vanishing_verdict(bundle_U(i) * twist));
  }
  for (long long t = 0; t <= r - 1; ++t) {
    BundleExpr twist = bundle_OH(q, d, -t);
    for (int i = 1; i <= n; ++i)
      qv.bundles.push_back(ctx.vanishing_verdict(bundle_Udual(i) * twist));
  }

  if (qv.predicted_collection_length > qv.hh0) {
    qv.answer = Answer::Negative;
    qv.note = "Hochschild obstruction: collection length " +
              std::to_string(qv.predicted_collection_length) + " exceeds dim HH_0 = " +
              std::to_string(qv.hh0);
    return qv;
  }
  qv.answer = fold_answers(qv.bundles, {});
  return qv;
}

QuestionVerdict question_c(SodContext& ctx) {
  const long long r = ctx.index();
  const int n = ctx.quiver().vertex_count();
  const Quiver& q = ctx.quiver();
  const DimVec& d = ctx.dims();

  // Forward twists whose higher cohomology must vanish for the collection
  // certified by question B (or A, when the finer one is out of reach).
  auto collect_h1 = [&](QuestionVerdict& qv, long long smax) {
    for (long long s = 0; s <= smax; ++s) {
      BundleExpr twist = bundle_OH(q, d, s);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          qv.h1_bundles.push_back(ctx.vanishing_verdict(bundle_Udual(i) * bundle_U(j) * twist));
      qv.h1_bundles.push_back(ctx.vanishing_verdict(twist));
      for (int i = 1; i <= n; ++i)
        qv.h1_bundles.push_back(ctx.vanishing_verdict(bundle_U(i) * twist));
      if (s >= 1)
        for (int i = 1; i <= n; ++i)
          qv.h1_bundles.push_back(ctx.vanishing_verdict(bundle_Udual(i) * twist));
    }
  };

  // Finer tier: the full r(n+1)-object collection on top of question B.
  QuestionVerdict full = question_b(ctx);
  full.question = "C";
  if (full.answer == Answer::Positive) {
    collect_h1(full, r - 1);
    full.answer = fold_answers(full.bundles, full.h1_bundles);
    if (full.answer == Answer::Positive) {
      full.note = "strongly exceptional collection of length " +
                  std::to_string(full.predicted_collection_length);
      return full;
    }
  }

  // Fallback tier: the (n+1)-object collection on top of question A.
  QuestionVerdict qa = question_a(ctx);
  QuestionVerdict out;
  out.question = "C";
  out.hh0 = qa.hh0;
  out.predicted_collection_length = qa.predicted_collection_length;
  out.bundles = qa.bundles;
  if (qa.answer == Answer::Positive) {
    collect_h1(out, 0);
    out.answer = fold_answers(out.bundles, out.h1_bundles);
    if (out.answer == Answer::Positive) {
      out.note = "strongly exceptional collection of length " +
                 std::to_string(out.predicted_collection_length) +
                 (full.answer == Answer::Positive ? "" : " (finer tier not certified)");
      return out;
    }
  } else {
    out.answer = qa.answer;
    out.note = qa.note;
  }
  if (out.answer == Answer::Inconclusive && full.answer == Answer::Negative)
    out.note = "finer tier negative; base tier inconclusive";
  return out;
}

Tri mkronecker_h0_condition(int m, const Linearisation& a, bool parallel) {
  if (m < 3) throw std::invalid_argument("mkronecker_h0_condition requires m >= 3");
  Quiver q = kronecker_quiver(m);
  DimVec d = {2, 3};
  SodContext ctx(q, d, canonical_stability(q, d), a, /*allow_chow=*/true, parallel);
  bool inconclusive = false;
  for (int i = 1; i <= 2; ++i) {
    VanishingVerdict v = ctx.vanishing_verdict(bundle_Udual(i));
    if (v.h0 == Tri::Nonzero) return Tri::Nonzero;
    if (v.h0 != Tri::Vanishes) inconclusive = true;
  }
  return inconclusive ? Tri::Inconclusive : Tri::Vanishes;
}

}  // namespace qv
