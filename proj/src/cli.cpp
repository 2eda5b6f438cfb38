#include "houghton/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "houghton/decide.hpp"
#include "houghton/expr.hpp"
#include "houghton/oracle.hpp"
#include "houghton/presentation.hpp"
#include "houghton/twisted.hpp"

namespace houghton {

namespace {

using nlohmann::json;

struct Options {
  int rays = 0;
  bool json = false;
  std::string phi;
  std::string sigma;
  std::string first;
  std::string second;
  Index depth = 6;
  std::size_t support = 6;
  std::size_t conj_support = 0;
  std::size_t count = 10;
  std::size_t ceiling = kDefaultNodeCeiling;
  int k_bound = 10;
};

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out) : json_mode_(o.json), out_(out) {}
  void line(const std::string& text) {
    if (!json_mode_) out_ << text << '\n';
  }
  json& doc() { return doc_; }
  int finish(int code) {
    if (json_mode_) out_ << doc_.dump() << '\n';
    return code;
  }

 private:
  bool json_mode_;
  std::ostream& out_;
  json doc_ = json::object();
};

NormElem parse_norm(const std::string& text, int n) { return eval_norm(parse_expr(text, n)); }
HoughtonElem parse_elem(const std::string& text, int n) { return eval_elem(parse_expr(text, n)); }
ShiftElem parse_shift(const std::string& text) { return eval_shift(parse_expr(text, 1)); }
FinitePerm parse_finitary(const std::string& text, int n) {
  const HoughtonElem g = parse_elem(text, n);
  if (!is_fsym(g)) throw std::invalid_argument("'" + text + "' is not finitary");
  return as_finite_perm(g);
}

std::string vector_text(const IntVector& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v(i));
  }
  return out + "]";
}

int report_decision(const TCResult& r, Emitter& em) {
  if (const auto* e = std::get_if<Equivalent>(&r)) {
    em.line("EQUIVALENT h=" + to_string(e->witness));
    em.doc()["result"] = "equivalent";
    em.doc()["witness"] = to_string(e->witness);
    return em.finish(exit_code::ok);
  }
  if (const auto* d = std::get_if<Distinct>(&r)) {
    em.line("DISTINCT " + to_string(d->certificate));
    em.doc()["result"] = "distinct";
    em.doc()["certificate"] = to_string(d->certificate);
    return em.finish(exit_code::negative);
  }
  const auto& u = std::get<Unknown>(r);
  em.line("UNKNOWN bound=" + std::to_string(u.searched_bound));
  em.doc()["result"] = "unknown";
  em.doc()["bound"] = u.searched_bound;
  return em.finish(exit_code::unknown);
}

int cmd_eval(const Options& o, Emitter& em) {
  const Expr e = parse_expr(o.first, o.rays);
  const std::string text =
      e.uses_shift() ? to_string(eval_shift(e)) : to_string(eval_norm(e));
  em.line(text);
  em.doc()["result"] = "ok";
  em.doc()["value"] = text;
  return em.finish(exit_code::ok);
}

int cmd_equal(const Options& o, Emitter& em) {
  const Expr a = parse_expr(o.first, o.rays);
  const Expr b = parse_expr(o.second, o.rays);
  bool same = false;
  if (a.uses_shift() || b.uses_shift())
    same = eval_shift(a) == eval_shift(b);
  else
    same = eval_norm(a) == eval_norm(b);
  em.line(same ? "EQUAL" : "NOT EQUAL");
  em.doc()["result"] = same ? "equal" : "not-equal";
  return em.finish(same ? exit_code::ok : exit_code::negative);
}

int cmd_pi(const Options& o, Emitter& em) {
  const std::string text = vector_text(pi(parse_elem(o.first, o.rays)));
  em.line(text);
  em.doc()["result"] = "ok";
  em.doc()["value"] = text;
  return em.finish(exit_code::ok);
}

int cmd_presentation(const Options& o, Emitter& em) {
  const auto report = check_presentation(o.rays, o.k_bound);
  json rows = json::array();
  for (const auto& r : report.relations) {
    em.line(std::string(r.passed ? "PASS " : "FAIL ") + r.relation +
            " instances=" + std::to_string(r.instances));
    rows.push_back({{"relation", r.relation}, {"passed", r.passed}, {"instances", r.instances}});
  }
  const bool ok = report.all_passed();
  em.line(ok ? "ALL PASSED" : "FAILED");
  em.doc()["result"] = ok ? "passed" : "failed";
  em.doc()["relations"] = rows;
  return em.finish(ok ? exit_code::ok : exit_code::negative);
}

int cmd_abelianization(const Options& o, Emitter& em) {
  const NormElem w = parse_norm(o.sigma, o.rays);
  if (!w.g().is_identity()) throw std::invalid_argument("--sigma must be a ray permutation");
  const IntMatrix m = abelianization_matrix(w.sigma());
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const IntVector row = m.row(i).transpose();
    em.line(vector_text(row));
    rows.push_back(std::vector<Index>(row.data(), row.data() + row.size()));
  }
  const Index det = exact_determinant(IntMatrix(m - IntMatrix::Identity(m.rows(), m.cols())));
  em.line("det(M-I)=" + std::to_string(det));
  em.line(std::string("eigenvalue-one=") + (det == 0 ? "yes" : "no"));
  em.doc()["result"] = "ok";
  em.doc()["matrix"] = rows;
  em.doc()["det"] = det;
  em.doc()["eigenvalue_one"] = det == 0;
  return em.finish(exit_code::ok);
}

DecideOptions decide_options(const Options& o) {
  return {o.depth, o.support, o.ceiling};
}

int cmd_decide(const Options& o, Emitter& em) {
  if (o.rays == 1) {
    const ShiftElem psi = parse_shift(o.phi);
    return report_decision(decide_twisted(psi, parse_finitary(o.first, 1),
                                          parse_finitary(o.second, 1), decide_options(o)),
                           em);
  }
  const NormElem w = parse_norm(o.phi, o.rays);
  return report_decision(decide_twisted(w, parse_elem(o.first, o.rays),
                                        parse_elem(o.second, o.rays), decide_options(o)),
                         em);
}

int cmd_witness(const Options& o, Emitter& em) {
  const NormElem s = parse_norm(o.sigma, o.rays);
  if (!s.g().is_identity()) throw std::invalid_argument("--sigma must be a ray permutation");
  return report_decision(decide_cycles_same_ray(parse_finitary(o.first, o.rays),
                                                parse_finitary(o.second, o.rays), s.sigma()),
                         em);
}

template <class Cert, class Rep>
int print_certificate(const Cert& cert, const Rep& rep_text, Emitter& em) {
  json reps = json::array();
  for (std::size_t i = 0; i < cert.representatives.size(); ++i) {
    const std::string t = rep_text(cert.representatives[i]);
    em.line("rep " + std::to_string(i) + " " + t);
    reps.push_back(t);
  }
  json pairs = json::array();
  for (const auto& p : cert.pairs) {
    const std::string t = to_string(p.certificate);
    em.line("pair " + std::to_string(p.i) + " " + std::to_string(p.j) + " " + t);
    pairs.push_back({{"i", p.i}, {"j", p.j}, {"certificate", t}});
  }
  const auto problems = check_certificate(cert);
  for (const auto& p : problems) em.line("INVALID " + p);
  if (problems.empty())
    em.line("VERIFIED count=" + std::to_string(cert.representatives.size()) +
            " pairs=" + std::to_string(cert.pairs.size()));
  em.doc()["result"] = problems.empty() ? "verified" : "invalid";
  em.doc()["representatives"] = reps;
  em.doc()["certificate"] = pairs;
  em.doc()["problems"] = problems;
  return em.finish(problems.empty() ? exit_code::ok : exit_code::negative);
}

int cmd_certify(const Options& o, Emitter& em) {
  if (o.rays == 1) {
    const auto cert = h1_infinity_certificate(parse_shift(o.phi), o.count);
    return print_certificate(
        cert, [](const FinitePerm& f) { return to_string(HoughtonElem::from_finite_perm(f)); },
        em);
  }
  const auto cert = rn_infinity_certificate(parse_norm(o.phi, o.rays), o.count);
  return print_certificate(cert, [](const HoughtonElem& g) { return to_string(g); }, em);
}

int cmd_classes(const Options& o, Emitter& em) {
  const TruncBox box(o.rays, o.depth);
  const std::size_t conj = std::max(o.conj_support, o.support);
  const ClassTable table = o.rays == 1
                               ? class_table(parse_shift(o.phi), box, o.support, conj, o.ceiling)
                               : class_table(parse_norm(o.phi, o.rays), box, o.support, conj,
                                             o.ceiling);
  json rows = json::array();
  for (const auto& c : table.classes) {
    const std::string rep = to_string(table.elements[c.front()]);
    em.line(std::to_string(c.size()) + " " + rep);
    rows.push_back({{"size", c.size()}, {"representative", rep}});
  }
  em.doc()["result"] = "ok";
  em.doc()["classes"] = rows;
  em.doc()["bound"] = conj;
  return em.finish(exit_code::ok);
}

int cmd_search(const Options& o, Emitter& em) {
  const TruncBox box(o.rays, o.depth);
  const SearchLimits limits{o.support, o.ceiling};
  const OrbitSearchResult r =
      o.rays == 1 ? orbit_search(parse_shift(o.phi), parse_finitary(o.first, 1),
                                 parse_finitary(o.second, 1), box, limits)
                  : orbit_search(parse_norm(o.phi, o.rays), parse_elem(o.first, o.rays),
                                 parse_elem(o.second, o.rays), box, limits);
  em.doc()["bound"] = r.support_limit;
  em.doc()["explored"] = r.explored;
  if (r.witness) {
    em.line("FOUND h=" + to_string(*r.witness));
    em.doc()["result"] = "found";
    em.doc()["witness"] = to_string(*r.witness);
    return em.finish(exit_code::ok);
  }
  em.line("NOT FOUND bound=" + std::to_string(r.support_limit) +
          " explored=" + std::to_string(r.explored));
  em.doc()["result"] = "not-found";
  return em.finish(exit_code::negative);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation in Houghton's groups and their automorphisms", "houghton"};
  app.require_subcommand(1);
  Options o;

  std::map<CLI::App*, int (*)(const Options&, Emitter&)> handlers;
  auto command = [&](const char* name, const char* help, int (*fn)(const Options&, Emitter&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--rays", o.rays, "number of rays n")->required()->check(CLI::Range(1, 64));
    sub->add_flag("--json", o.json, "machine-readable output");
    handlers[sub] = fn;
    return sub;
  };

  auto* eval = command("eval", "evaluate an expression to canonical form", cmd_eval);
  eval->add_option("expr", o.first)->required();

  auto* equal = command("equal", "compare two expressions", cmd_equal);
  equal->add_option("x", o.first)->required();
  equal->add_option("y", o.second)->required();

  auto* pi_cmd = command("pi", "translation vector of an element", cmd_pi);
  pi_cmd->add_option("expr", o.first)->required();

  auto* pres = command("check-presentation", "verify the defining relations", cmd_presentation);
  pres->add_option("--k-bound", o.k_bound, "largest |k| for the infinite family (n = 2)")
      ->check(CLI::Range(2, 1000));

  auto* ab = command("abelianization", "matrix of sigma on the abelianization", cmd_abelianization);
  ab->add_option("--sigma", o.sigma)->required();

  auto* decide = command("decide-tc", "decide twisted conjugacy of two elements", cmd_decide);
  decide->add_option("--phi", o.phi, "automorphism as a normalizer element")->required();
  decide->add_option("x", o.first)->required();
  decide->add_option("y", o.second)->required();
  decide->add_option("--depth", o.depth, "box depth for the fallback search")
      ->check(CLI::Range(Index{2}, Index{64}));
  decide->add_option("--support", o.support, "state support bound for the fallback search");
  decide->add_option("--ceiling", o.ceiling, "node ceiling for the fallback search");

  auto* wit = command("witness", "witness for two equal-length cycles on one ray", cmd_witness);
  wit->add_option("--sigma", o.sigma)->required();
  wit->add_option("tau", o.first)->required();
  wit->add_option("tau2", o.second)->required();

  auto* cert = command("certify-rinf", "representatives of distinct twisted classes", cmd_certify);
  cert->add_option("--phi", o.phi)->required();
  cert->add_option("--count", o.count)->check(CLI::Range(std::size_t{1}, std::size_t{200}));

  auto* classes = command("oracle-classes", "bounded twisted classes in a box", cmd_classes);
  classes->add_option("--phi", o.phi)->required();
  classes->add_option("--depth", o.depth)->required()->check(CLI::Range(Index{2}, Index{64}));
  classes->add_option("--support", o.support, "largest support of listed elements");
  classes->add_option("--conj-support", o.conj_support, "largest support of search states");
  classes->add_option("--ceiling", o.ceiling);

  auto* search = command("oracle-search", "bounded search for a twisted witness", cmd_search);
  search->add_option("--phi", o.phi)->required();
  search->add_option("--depth", o.depth)->required()->check(CLI::Range(Index{2}, Index{64}));
  search->add_option("--support", o.support);
  search->add_option("--ceiling", o.ceiling);
  search->add_option("x", o.first)->required();
  search->add_option("y", o.second)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::usage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Emitter em(o, out);
  try {
    return handlers.at(chosen)(o, em);
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.offset() << ": " << e.detail() << '\n';
    return exit_code::parse;
  } catch (const EvalError& e) {
    err << "evaluation error: " << e.what() << '\n';
    return exit_code::parse;
  } catch (const CeilingExceeded& e) {
    err << "search stopped: " << e.what() << '\n';
    em.doc()["result"] = "unknown";
    em.doc()["bound"] = o.support;
    em.line("UNKNOWN bound=" + std::to_string(o.support));
    return em.finish(exit_code::unknown);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
}

}  // namespace houghton
