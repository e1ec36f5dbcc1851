// Command-line front end: assumption checks, HN strata, Teleman weight
// tables, Hodge data, Chow basis sizes, Euler characteristics and the
// semiorthogonality verdicts, over quiver input documents.
//
// Exit codes: 0 positive/success, 1 negative, 2 inconclusive,
// 3 usage or input errors, 4 internal errors.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qv/betti.hpp"
#include "qv/chow.hpp"
#include "qv/exprparse.hpp"
#include "qv/io.hpp"
#include "qv/sod.hpp"

using namespace qv;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string input;
  std::string format = "text";
  std::string linearisation;
  std::string theta;
  std::string expr;
  std::string scan;
};

std::vector<long long> parse_csv(const std::string& s, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long long v = std::stoll(item, &pos);
    if (pos != item.size()) throw std::invalid_argument(std::string("bad entry in ") + what);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument(std::string("empty ") + what);
  return out;
}

Instance load(const CommonOpts& opts) {
  Instance inst = load_instance(opts.input);
  if (!opts.theta.empty()) {
    inst.theta = parse_csv(opts.theta, "--theta");
    if (inst.theta.size() != static_cast<size_t>(inst.q.vertex_count()))
      throw std::invalid_argument("--theta has wrong length");
    inst.theta_defaulted = false;
  }
  if (!opts.linearisation.empty()) {
    inst.a = parse_csv(opts.linearisation, "--linearisation");
    if (inst.a.size() != static_cast<size_t>(inst.q.vertex_count()))
      throw std::invalid_argument("--linearisation has wrong length");
    long long p = 0;
    for (size_t i = 0; i < inst.a.size(); ++i) p += inst.a[i] * inst.d[i];
    if (p != 1) throw std::invalid_argument("--linearisation does not satisfy a . d = 1");
    inst.lin_defaulted = false;
  }
  return inst;
}

void require_linearisation(const Instance& inst) {
  if (inst.a.empty())
    throw std::invalid_argument(
        "this command needs a linearisation: none given and gcd(d) > 1 leaves none to solve for");
}

void require_assumptions(const Instance& inst) {
  AssumptionReport rep = check_assumptions(inst.q, inst.d, inst.theta);
  if (rep.all()) return;
  std::string which = !rep.acyclic ? "acyclicity"
                      : !rep.coprime ? "coprimality"
                                     : "strong ample stability";
  throw std::invalid_argument("assumption violated: " + which);
}

std::string join_vec(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join_rats(const std::vector<Rat>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
  return s;
}

json type_to_json(const HnType& t) {
  json parts = json::array();
  for (const DimVec& p : t.parts) parts.push_back(p);
  return parts;
}

int run_check_assumptions(const Instance& inst, const std::string& format) {
  AssumptionReport rep = check_assumptions(inst.q, inst.d, inst.theta);
  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    j["acyclic"] = rep.acyclic;
    j["coprime"] = rep.coprime;
    j["strongly_amply_stable"] = rep.strongly_amply_stable;
    j["all"] = rep.all();
    j["cycle_witnesses"] = rep.cycle_witnesses;
    json cw = json::array(), aw = json::array();
    for (const DimVec& w : rep.coprimality_witnesses) cw.push_back(w);
    for (const DimVec& w : rep.ample_stability_witnesses) aw.push_back(w);
    j["coprimality_witnesses"] = std::move(cw);
    j["ample_stability_witnesses"] = std::move(aw);
    std::cout << j.dump(2) << "\n";
  } else {
    auto line = [](const char* name, bool ok) {
      std::cout << name << ": " << (ok ? "yes" : "NO") << "\n";
    };
    line("acyclic", rep.acyclic);
    line("coprime", rep.coprime);
    line("strongly amply stable", rep.strongly_amply_stable);
    for (const DimVec& w : rep.coprimality_witnesses)
      std::cout << "  coprimality violated by d' = " << to_string(w) << "\n";
    for (const DimVec& w : rep.ample_stability_witnesses)
      std::cout << "  ample stability violated by d' = " << to_string(w) << "\n";
    std::cout << (rep.all() ? "all assumptions hold" : "assumptions violated") << "\n";
  }
  return rep.all() ? 0 : 1;
}

int run_hn_types(const Instance& inst, const std::string& format) {
  auto types = hn_types(inst.q, inst.d, inst.theta);
  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    json arr = json::array();
    for (const HnType& t : types) arr.push_back(type_to_json(t));
    j["types"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const HnType& t : types) std::cout << to_string(t) << "\n";
  }
  return 0;
}

int run_teleman_table(const Instance& inst, const std::string& format) {
  require_linearisation(inst);
  Stability can = canonical_stability(inst.q, inst.d);
  long long r = fano_index(inst.q, inst.d);
  std::vector<Rat> h_twist;
  for (long long t : can) h_twist.push_back(Rat(t, r));

  auto strata = stratum_weights_all(inst.q, inst.d, inst.theta);
  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    json rows = json::array();
    for (const StratumWeights& sw : strata) {
      json row;
      row["type"] = type_to_json(sw.type);
      row["c"] = sw.c;
      row["k"] = sw.k;
      json hom = json::array();
      for (const Rat& w : weights_hom_support(sw)) hom.push_back(w.str());
      row["hom_support"] = std::move(hom);
      json univ = json::array();
      for (const Rat& w : weights_universal_support(sw, inst.a)) univ.push_back(w.str());
      row["universal_support"] = std::move(univ);
      // Beyond-table data: per-vertex weight multiplicities.
      json mult = json::object();
      for (int i = 1; i <= inst.q.vertex_count(); ++i) {
        json entries = json::array();
        for (const auto& [w, m] : weights_universal(sw, i, inst.a))
          entries.push_back({w.str(), m});
        mult["U" + std::to_string(i)] = std::move(entries);
      }
      row["universal_multiplicities"] = std::move(mult);
      row["linearised_weight"] = weight_linearised(sw, h_twist).str();
      row["eta"] = eta_bound(sw, inst.q);
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "d* | W(U_i^ * U_j) | W(U_i(a)) | W(L(theta_can/r)) | eta\n";
    for (const StratumWeights& sw : strata) {
      std::cout << to_string(sw.type) << " | " << join_rats(weights_hom_support(sw)) << " | "
                << join_rats(weights_universal_support(sw, inst.a)) << " | "
                << weight_linearised(sw, h_twist).str() << " | " << eta_bound(sw, inst.q) << "\n";
    }
  }
  return 0;
}

int run_hodge(const Instance& inst, const std::string& format) {
  require_assumptions(inst);
  PoincarePolynomial p = poincare_polynomial(inst.q, inst.d, inst.theta);
  long long hh0 = p.sum();
  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    j["hodge"] = p.b;
    j["hh0"] = hh0;
    j["picard_rank"] = p.degree() >= 1 ? p.b[1] : 0;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << join_vec(p.b) << " | HH0 = " << hh0 << "\n";
  }
  return 0;
}

int run_chow_basis(const Instance& inst, const std::string& format) {
  require_assumptions(inst);
  require_linearisation(inst);
  ChowPresentation p(inst.q, inst.d, inst.theta, inst.a);
  std::vector<int> sizes = p.basis_sizes();
  std::vector<long long> sizes_ll(sizes.begin(), sizes.end());
  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    j["basis_sizes"] = sizes_ll;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << join_vec(sizes_ll) << "\n";
  }
  return 0;
}

int run_euler_char(const Instance& inst, const std::string& format, const std::string& expr) {
  require_assumptions(inst);
  require_linearisation(inst);
  BundleExpr f = parse_bundle_expr(expr, inst.q, inst.d);
  ChowPresentation p(inst.q, inst.d, inst.theta, inst.a);
  Zint chi = p.euler_characteristic(f);
  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    j["bundle"] = to_string(f);
    j["chi"] = chi.str();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chi(" << to_string(f) << ") = " << chi.str() << "\n";
  }
  return 0;
}

json verdict_to_json(const VanishingVerdict& v) {
  json j;
  j["bundle"] = to_string(v.bundle);
  j["H0"] = to_string(v.h0);
  j["H>=1"] = to_string(v.hge1);
  j["all"] = to_string(v.all_k);
  if (v.chi) j["chi"] = v.chi->str();
  json ev = json::array();
  for (const Evidence& e : v.evidence)
    ev.push_back({{"rule", to_string(e.rule)}, {"target", e.target}, {"note", e.note}});
  j["evidence"] = std::move(ev);
  return j;
}

void print_verdict_line(const VanishingVerdict& v, bool h1_only) {
  std::cout << "  " << to_string(v.bundle) << " : ";
  if (h1_only) {
    std::cout << "H>=1 " << to_string(v.hge1);
  } else {
    std::cout << "H0 " << to_string(v.h0) << ", H>=1 " << to_string(v.hge1) << ", all "
              << to_string(v.all_k);
  }
  std::cout << " [";
  for (size_t i = 0; i < v.evidence.size(); ++i)
    std::cout << (i ? "; " : "") << to_string(v.evidence[i].rule);
  std::cout << "]\n";
}

// The questions ask for the existence of a linearisation; scan a finite
// user-supplied list and report each candidate. Exit reflects the best
// candidate found.
int run_verify_sod_scan(const Instance& inst, const std::string& format,
                        const std::string& scan) {
  std::vector<Linearisation> candidates;
  std::stringstream ss(scan);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    Linearisation a = parse_csv(item, "--scan-linearisations");
    if (a.size() != static_cast<size_t>(inst.q.vertex_count()))
      throw std::invalid_argument("--scan-linearisations entry has wrong length");
    long long p = 0;
    for (size_t i = 0; i < a.size(); ++i) p += a[i] * inst.d[i];
    if (p != 1)
      throw std::invalid_argument("--scan-linearisations entry does not satisfy a . d = 1");
    candidates.push_back(std::move(a));
  }
  if (candidates.empty()) throw std::invalid_argument("empty --scan-linearisations list");

  int best = 3;
  json rows = json::array();
  for (const Linearisation& a : candidates) {
    SodContext ctx(inst.q, inst.d, inst.theta, a);
    QuestionVerdict qa = question_a(ctx);
    QuestionVerdict qb = question_b(ctx);
    QuestionVerdict qc = question_c(ctx);
    int code = 0;
    for (const QuestionVerdict* qv : {&qa, &qb, &qc}) {
      if (qv->answer == Answer::Negative) code = std::max(code, 1);
      if (qv->answer == Answer::Inconclusive) code = std::max(code, 2);
    }
    std::string a_str;
    for (size_t i = 0; i < a.size(); ++i) a_str += (i ? "," : "") + std::to_string(a[i]);
    if (format == "json") {
      rows.push_back({{"linearisation", a},
                      {"A", to_string(qa.answer)},
                      {"B", to_string(qb.answer)},
                      {"C", to_string(qc.answer)}});
    } else {
      std::cout << "a = (" << a_str << "): A " << to_string(qa.answer) << ", B "
                << to_string(qb.answer) << ", C " << to_string(qc.answer) << "\n";
    }
    // Exit code 1 only means some question is negative for every candidate.
    best = std::min(best, code);
  }
  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    j["scan"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  }
  return best;
}

int run_verify_sod(const Instance& inst, const std::string& format) {
  require_linearisation(inst);
  SodContext ctx(inst.q, inst.d, inst.theta, inst.a);
  QuestionVerdict qa = question_a(ctx);
  QuestionVerdict qb = question_b(ctx);
  QuestionVerdict qc = question_c(ctx);

  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    for (const QuestionVerdict* qv : {&qa, &qb, &qc}) {
      json q;
      q["answer"] = to_string(qv->answer);
      q["collection_length"] = qv->predicted_collection_length;
      q["hh0"] = qv->hh0;
      q["note"] = qv->note;
      json bl = json::array();
      for (const VanishingVerdict& v : qv->bundles) bl.push_back(verdict_to_json(v));
      q["bundles"] = std::move(bl);
      json hl = json::array();
      for (const VanishingVerdict& v : qv->h1_bundles) hl.push_back(verdict_to_json(v));
      q["h1_bundles"] = std::move(hl);
      j["question_" + qv->question] = std::move(q);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const QuestionVerdict* qv : {&qa, &qb, &qc}) {
      std::cout << "Question " << qv->question << ": " << to_string(qv->answer) << " (collection "
                << qv->predicted_collection_length << ", HH0 = " << qv->hh0 << ")";
      if (!qv->note.empty()) std::cout << " -- " << qv->note;
      std::cout << "\n";
      for (const VanishingVerdict& v : qv->bundles) print_verdict_line(v, false);
      for (const VanishingVerdict& v : qv->h1_bundles) print_verdict_line(v, true);
    }
  }

  bool negative = false, inconclusive = false;
  for (const QuestionVerdict* qv : {&qa, &qb, &qc}) {
    negative = negative || qv->answer == Answer::Negative;
    inconclusive = inconclusive || qv->answer == Answer::Inconclusive;
  }
  if (negative) return 1;
  if (inconclusive) return 2;
  return 0;
}

int run_theorem_d(const Instance& inst, const std::string& format) {
  Instance canonical = inst;
  canonical.theta = canonical_stability(inst.q, inst.d);
  require_assumptions(canonical);
  TStarReport rep = t_star(inst.q, inst.d);
  bool ok = rep.min >= rep.fano_index - 1;
  if (format == "json") {
    json j;
    j["schema"] = "qv-1";
    json per = json::array();
    for (const auto& [type, t] : rep.per_type)
      per.push_back({{"type", type_to_json(type)}, {"t", t}});
    j["per_type"] = std::move(per);
    j["min"] = rep.min;
    j["fano_index"] = rep.fano_index;
    j["criterion"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [type, t] : rep.per_type)
      std::cout << to_string(type) << ": t = " << t << "\n";
    std::cout << "min t = " << rep.min << ", r - 1 = " << (rep.fano_index - 1) << "\n";
    std::cout << "criterion " << (ok ? "satisfied" : "not satisfied") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification toolkit for quiver moduli"};
  app.require_subcommand(1);

  CommonOpts opts;
  auto add_common = [&](CLI::App* cmd, bool needs_expr = false) {
    cmd->add_option("--input", opts.input, "quiver input document (JSON)")->required();
    cmd->add_option("--format", opts.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--linearisation", opts.linearisation, "override a_1,...,a_n");
    cmd->add_option("--theta", opts.theta, "override t_1,...,t_n");
    if (needs_expr)
      cmd->add_option("--expr", opts.expr, "bundle expression, e.g. \"U1^ * U2 * O(-1H)\"")
          ->required();
  };

  CLI::App* c_check = app.add_subcommand("check-assumptions", "acyclicity, coprimality, stability");
  add_common(c_check);
  CLI::App* c_hn = app.add_subcommand("hn-types", "Harder-Narasimhan types");
  add_common(c_hn);
  CLI::App* c_tel = app.add_subcommand("teleman-table", "per-stratum weights and bounds");
  add_common(c_tel);
  CLI::App* c_hodge = app.add_subcommand("hodge", "diagonal Hodge numbers and HH_0");
  add_common(c_hodge);
  CLI::App* c_basis = app.add_subcommand("chow-basis", "graded basis sizes of the Chow ring");
  add_common(c_basis);
  CLI::App* c_chi = app.add_subcommand("euler-char", "Euler characteristic of a bundle");
  add_common(c_chi, true);
  CLI::App* c_sod = app.add_subcommand("verify-sod", "question verdicts A, B, C");
  add_common(c_sod);
  c_sod->add_option("--scan-linearisations", opts.scan,
                    "semicolon-separated candidates, e.g. \"2,-1;-1,1\"");
  CLI::App* c_thd = app.add_subcommand("theorem-d", "twist bound criterion");
  add_common(c_thd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    Instance inst = load(opts);
    if (app.got_subcommand(c_check)) return run_check_assumptions(inst, opts.format);
    if (app.got_subcommand(c_hn)) return run_hn_types(inst, opts.format);
    if (app.got_subcommand(c_tel)) return run_teleman_table(inst, opts.format);
    if (app.got_subcommand(c_hodge)) return run_hodge(inst, opts.format);
    if (app.got_subcommand(c_basis)) return run_chow_basis(inst, opts.format);
    if (app.got_subcommand(c_chi)) return run_euler_char(inst, opts.format, opts.expr);
    if (app.got_subcommand(c_sod))
      return opts.scan.empty() ? run_verify_sod(inst, opts.format)
                               : run_verify_sod_scan(inst, opts.format, opts.scan);
    if (app.got_subcommand(c_thd)) return run_theorem_d(inst, opts.format);
    std::cerr << "no subcommand\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
