// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 resource bound exceeded.
#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tpa/grammar.hpp"
#include "tpa/suites.hpp"

using namespace tpa;

namespace {

struct Config {
  std::string field = "q";
  std::uint64_t prime = 0;
  std::optional<std::size_t> max_degree;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string output_dir;
};

// Instance selection shared by the algebra commands.
struct Instance {
  std::string type;
  std::string orientation;  // one 0/1 per edge, 1 reverses it
  std::string input;
  std::size_t d = 1;
};

struct Outcome {
  std::string text;
  std::string extension = "txt";
  bool verified = true;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t parse_field(const std::string& f) {
  if (f == "q" || f == "Q") return 0;
  if (f.rfind("gf:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(f.substr(3));
    } catch (const std::exception&) {
      throw InputError("bad field '" + f + "'");
    }
    if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
    return p;
  }
  throw InputError("field must be q or gf:<p>");
}

void require_rationals(const Config& cfg, const std::string& what) {
  if (cfg.prime) throw InputError(what + " needs the rationals (prime fields: parse and pi --mode combinatorial)");
}

std::vector<bool> orientation_flags(const Instance& in) {
  std::vector<bool> out;
  for (char c : in.orientation) {
    if (c != '0' && c != '1') throw InputError("orientation is a string of 0 and 1");
    out.push_back(c == '1');
  }
  return out;
}

AlgebraPresentation in_field(AlgebraPresentation p, std::uint64_t prime) {
  if (!prime) return p;
  for (auto& r : p.relations) {
    PathElement x;
    for (const auto& [path, c] : r.terms()) x.add_term(path, c.in_field(prime));
    r = x;
  }
  return p;
}

AlgebraPresentation instance_presentation(const Instance& in, const Config& cfg) {
  if (!in.input.empty() && !in.type.empty()) throw InputError("give either --type or --input");
  if (!in.input.empty()) {
    auto p = parse_presentation(read_file(in.input), cfg.prime);
    p.validate();
    return p;
  }
  if (in.type.empty()) throw InputError("--type or --input is required");
  auto type = DynkinType::parse(in.type);
  auto flags = orientation_flags(in);
  if (!flags.empty() && flags.size() != dynkin_edges(type).size()) throw InputError("orientation length differs from the edge count");
  return AlgebraPresentation{build_dynkin(type, flags), {}};
}

FDAlgebra instance_algebra(const Instance& in, const Config& cfg) { return quotient_algebra(instance_presentation(in, cfg)); }

void add_instance_options(CLI::App* sub, Instance& in, bool with_d = true) {
  sub->add_option("--type", in.type, "Dynkin type, e.g. A3 or D4");
  sub->add_option("--orientation", in.orientation, "per edge 0 (default direction) or 1 (reversed)");
  sub->add_option("--input", in.input, "presentation file in the quiver/relations grammar");
  if (with_d) sub->add_option("--d", in.d, "d of tau_d")->check(CLI::PositiveNumber);
}

std::string dims_text(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

Outcome emit_json(const Json& j) { return {j.dump(2) + "\n", "json", true}; }

Outcome cmd_parse(const Config& cfg, const std::string& file) {
  auto p = parse_presentation(read_file(file), cfg.prime);
  p.validate();
  if (cfg.format == "dot") return {quiver_to_dot(p.quiver), "dot", true};
  std::optional<FDAlgebra> a;
  std::string finite = "unknown";
  try {
    QuotientOptions opts;
    if (cfg.max_degree) opts.degree_bound = *cfg.max_degree;
    a = quotient_algebra(p, opts);
    finite = "yes";
  } catch (const GroebnerBoundExceeded&) {
    finite = "not certified within the degree bound";
  }
  if (cfg.format == "json") {
    Json j = presentation_json(p);
    j["dim"] = a ? Json(a->dim()) : Json(nullptr);
    j["finite_dimensional"] = finite;
    if (a) j["graded_dims"] = a->graded_dims();
    return emit_json(j);
  }
  std::ostringstream os;
  os << render_presentation(p);
  os << "# vertices " << p.quiver.vertex_count() << ", arrows " << p.quiver.arrow_count() << ", relations "
     << p.relations.size() << "\n";
  if (a)
    os << "# dim " << a->dim() << ", graded " << dims_text(a->graded_dims()) << "\n";
  else
    os << "# finite dimension " << finite << "\n";
  return {os.str(), "txt", true};
}

Outcome cmd_pi(const Config& cfg, const Instance& in, const std::string& mode, bool check) {
  const bool all = mode == "all";
  if (mode != "combinatorial" && mode != "graded" && mode != "tensor" && !all)
    throw InputError("mode must be combinatorial, graded, tensor or all");
  if (mode != "combinatorial") require_rationals(cfg, "pi --mode " + mode);
  std::map<std::string, FDAlgebra> results;
  if (mode == "combinatorial" || all) {
    if (in.type.empty()) throw InputError("combinatorial mode needs --type");
    auto pres = preprojective_presentation(build_dynkin(DynkinType::parse(in.type), orientation_flags(in)));
    results.emplace("combinatorial", quotient_algebra(in_field(pres, cfg.prime)));
    if (cfg.prime) results.at("combinatorial").field = cfg.prime;
  }
  if (mode == "graded" || mode == "tensor" || all) {
    auto h = instance_algebra(in, cfg);
    if (mode == "graded" || all) {
      auto g = pi_graded(h, in.d);
      results.emplace("graded", std::move(g.algebra));
    }
    if (mode == "tensor" || all) results.emplace("tensor", pi_tensor(h, in.d).algebra);
  }
  bool agree = true;
  if (results.size() > 1) {
    const auto& first = results.begin()->second;
    for (const auto& [name, a] : results) {
      agree = agree && a.dim() == first.dim() && a.cartan() == first.cartan();
      if (name != "combinatorial" && results.count("graded") && results.count("tensor"))
        agree = agree && results.at("graded").graded_dims() == results.at("tensor").graded_dims();
    }
  }
  const bool verified = !check || agree;
  if (!all && cfg.format == "json") return emit_json(algebra_json(results.begin()->second));
  if (!all && cfg.format == "dot") {
    const auto& a = results.begin()->second;
    return {quiver_to_dot(a.presentation ? a.presentation->quiver : a.quiver), "dot", true};
  }
  if (cfg.format == "json") {
    Json j = Json::object();
    for (const auto& [name, a] : results) j[name] = Json{{"dim", a.dim()}, {"graded_dims", a.graded_dims()}, {"cartan", a.cartan()}};
    j["agree"] = agree;
    return {j.dump(2) + "\n", "json", verified};
  }
  std::ostringstream os;
  for (const auto& [name, a] : results)
    os << name << ": dim " << a.dim() << ", graded " << dims_text(a.graded_dims()) << "\n";
  if (results.size() > 1) os << "routes " << (agree ? "agree" : "DISAGREE") << "\n";
  if (!all && results.begin()->second.presentation) os << render_presentation(*results.begin()->second.presentation);
  return {os.str(), "txt", verified};
}

Outcome cmd_auslander(const Config& cfg, const Instance& in) {
  require_rationals(cfg, "auslander");
  auto ar = auslander_algebra(instance_algebra(in, cfg), in.d);
  if (cfg.format == "dot") return {quiver_to_dot(ar.presentation.quiver), "dot", true};
  if (cfg.format == "json") {
    return emit_json(Json{{"catalog", catalog_json(ar.catalog)},
                          {"presentation", render_presentation(ar.presentation)},
                          {"dim", ar.gamma.algebra.dim()}});
  }
  std::ostringstream os;
  for (const auto& e : ar.catalog.entries) {
    os << "# " << e.name << " dims " << dims_text(e.module.dims);
    if (e.successor) os << " tau^- " << ar.catalog.entries[*e.successor].name;
    if (e.injective) os << " injective";
    os << "\n";
  }
  os << render_presentation(ar.presentation);
  return {os.str(), "txt", true};
}

Outcome cmd_psi(const Config& cfg, const Instance& in, const std::string& mode, bool check) {
  require_rationals(cfg, "psi");
  const bool all = mode == "all";
  if (mode != "x" && mode != "end" && mode != "presentation" && !all)
    throw InputError("mode must be x, end, presentation or all");
  auto h = instance_algebra(in, cfg);
  Json j = Json::object();
  std::ostringstream os;
  bool verified = true;
  std::vector<std::vector<std::size_t>> seen;
  std::optional<TotalPresentation> tp;
  if (mode == "presentation" || all || check) tp = total_presentation(h, in.d);
  const SummandCatalog cat = tp ? tp->auslander.catalog : auslander_algebra(h, in.d).catalog;
  GradedHomAlgebra psi = [&] {
    TauTower tower(tau_functor_data(h, in.d), cat.modules(), tau_iteration_bound(h));
    return psi_x(tower, cat.names(), cfg.max_degree, false);
  }();
  if (mode == "x" || all) {
    j["psi_x"] = psi.graded_dims();
    os << "psi_X: " << dims_text(psi.graded_dims()) << "\n";
    seen.push_back(psi.graded_dims());
  }
  if (mode == "end" || all) {
    if (in.d != 1) throw InputError("the End(Pi (x) Pi) route is implemented for d = 1");
    auto e = end_of_pi_tensor_pi(pi_with_base(pi_graded(h, in.d)));
    j["end_pi_tensor_pi"] = e.end.graded_dims();
    os << "End(Pi (x) Pi): " << dims_text(e.end.graded_dims()) << "\n";
    seen.push_back(e.end.graded_dims());
  }
  if (tp && (mode == "presentation" || all)) {
    std::map<std::string, int> degrees;
    const Quiver& gq = tp->auslander.presentation.quiver;
    for (const auto& a : tp->presentation.quiver.arrows()) degrees[a.name] = gq.find_arrow(a.name) ? 0 : 1;
    QuotientOptions opts;
    opts.arrow_degrees = degrees;
    auto q = quotient_algebra(tp->presentation, opts);
    j["presentation_dims"] = q.graded_dims();
    j["presentation"] = render_presentation(tp->presentation);
    os << "presentation: " << dims_text(q.graded_dims()) << "\n" << render_presentation(tp->presentation);
    seen.push_back(q.graded_dims());
  }
  if (cfg.max_degree) {
    for (auto& s : seen)
      if (s.size() > *cfg.max_degree + 1) s.resize(*cfg.max_degree + 1);
  }
  const bool agree = std::all_of(seen.begin(), seen.end(), [&](const auto& s) { return s == seen.front(); });
  j["agree"] = agree;
  if (seen.size() > 1) os << "routes " << (agree ? "agree" : "DISAGREE") << "\n";
  if (check) {
    if (cfg.max_degree) throw InputError("--check needs all degrees (drop --max-degree)");
    auto rep = verify_iso_via_surjection(*tp, psi);
    j["surjection"] = surjection_json(rep);
    os << "surjection check: " << (rep.ok() ? "pass" : "FAIL") << " (dim " << rep.quotient_dim << " vs " << rep.psi_dim << ")\n";
    verified = rep.ok() && agree;
  }
  if (cfg.format == "dot") {
    if (!tp) tp = total_presentation(h, in.d);
    return {quiver_to_dot(tp->presentation.quiver), "dot", verified};
  }
  if (cfg.format == "json") return {j.dump(2) + "\n", "json", verified};
  return {os.str(), "txt", verified};
}

Outcome cmd_family(const Config& cfg, int d, int n, const std::string& which, bool verify) {
  if (which != "pi" && which != "lambda" && which != "psi" && which != "dictionary")
    throw InputError("--which must be pi, lambda, psi or dictionary");
  if (d < 1 || n < 1) throw InputError("d and n must be positive");
  Json j = Json::object();
  std::ostringstream os;
  bool verified = true;
  AlgebraPresentation p = which == "pi" ? pi_dn(d, n) : which == "lambda" ? lambda_dn(d, n) : psi_dn(d, n);
  if (which == "dictionary") {
    auto dict = family_dictionary(d, n);
    j["dictionary"] = dictionary_json(dict);
    for (const auto& e : dict)
      os << lattice_label(e.point) << " " << e.tag << (e.projective ? " projective" : "") << (e.injective ? " injective" : "")
         << (e.q_arrow.empty() ? "" : " q=" + e.q_arrow) << "\n";
  } else {
    j["presentation"] = presentation_json(p);
    os << render_presentation(p);
  }
  if (verify) {
    require_rationals(cfg, "family --verify");
    auto rep = verify_family_proposition(d, n);
    j["proposition"] = family_json(rep);
    for (const auto& c : rep.checks)
      os << "# " << c.name << ": " << (c.ok() ? "pass" : "FAIL " + c.detail + c.match.detail) << "\n";
    verified = rep.ok();
  }
  if (cfg.format == "dot") return {quiver_to_dot(p.quiver), "dot", verified};
  if (cfg.format == "json") return {j.dump(2) + "\n", "json", verified};
  return {os.str(), "txt", verified};
}

Outcome cmd_check(const Config& cfg, const std::string& name, bool slow) {
  SuiteOptions opts;
  opts.slow = slow;
  opts.seed = cfg.seed;
  std::vector<const SuiteInfo*> run;
  if (name == "all")
    for (const auto& s : suites()) run.push_back(&s);
  else
    run.push_back(&find_suite(name));
  Json j = Json::array();
  std::ostringstream os;
  bool ok = true;
  bool bound = false;
  for (const auto* s : run) {
    auto r = s->run(opts);
    ok = ok && r.pass();
    j.push_back(r.json());
    os << s->name << ": " << (r.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& it : r.items) {
      os << "  " << it.label << ": " << (it.pass ? "ok" : "FAILED " + it.detail) << "\n";
      bound = bound || it.detail.rfind("bound exceeded", 0) == 0;
    }
  }
  if (bound) throw BoundExceeded("a suite item exceeded a resource bound");
  if (cfg.format == "json") return {j.dump(2) + "\n", "json", ok};
  return {os.str(), "txt", ok};
}

Outcome cmd_export(const Config& cfg, const Instance& in, const std::string& what) {
  if (what == "quiver") {
    auto p = instance_presentation(in, cfg);
    if (cfg.format == "json") return emit_json(quiver_json(p.quiver));
    return {quiver_to_dot(p.quiver), "dot", true};
  }
  if (what == "presentation") {
    auto p = instance_presentation(in, cfg);
    if (cfg.format == "json") return emit_json(presentation_json(p));
    return {render_presentation(p), "txt", true};
  }
  if (what == "algebra") {
    auto a = instance_algebra(in, cfg);
    if (cfg.prime) a.field = cfg.prime;
    return emit_json(algebra_json(a));
  }
  if (what == "ar") {
    require_rationals(cfg, "export --what ar");
    auto ar = knit_ar_quiver(instance_algebra(in, cfg));
    if (cfg.format == "json") return emit_json(ar_quiver_json(ar));
    return {ar_quiver_to_dot(ar), "dot", true};
  }
  if (what == "projectives" || what == "injectives") {
    auto a = instance_algebra(in, cfg);
    Json arr = Json::array();
    for (std::size_t v = 0; v < a.vertex_count(); ++v)
      arr.push_back(representation_json(a.quiver, what == "projectives" ? projective(a, v) : injective(a, v)));
    return emit_json(arr);
  }
  throw InputError("--what must be quiver, presentation, algebra, ar, projectives or injectives");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total preprojective algebras: constructions and checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  std::size_t max_degree = 0;
  auto* md = app.add_option("--max-degree", max_degree, "highest degree to compute")->check(CLI::NonNegativeNumber);
  app.add_option("--field", cfg.field, "q or gf:<p>");
  app.add_option("--format", cfg.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--seed", cfg.seed, "seed of the generic-witness sampler");
  app.add_option("--output-dir", cfg.output_dir, "write <command>.<ext> here instead of stdout");

  std::string file, mode = "combinatorial", psi_mode = "all", which = "psi", suite = "all", what = "quiver";
  bool check = false, verify = false, slow = false;
  int fd = 1, fn = 3;
  Instance in;

  auto* parse = app.add_subcommand("parse", "parse and validate a presentation");
  parse->add_option("file", file, "presentation file")->required();
  auto* pi = app.add_subcommand("pi", "preprojective algebra");
  add_instance_options(pi, in);
  pi->add_option("--mode", mode, "combinatorial, graded, tensor or all");
  pi->add_flag("--check", check, "fail unless the routes agree");
  auto* aus = app.add_subcommand("auslander", "catalog of tau^- translates and the Auslander algebra");
  add_instance_options(aus, in);
  auto* psi = app.add_subcommand("psi", "total preprojective algebra");
  add_instance_options(psi, in);
  psi->add_option("--mode", psi_mode, "x, end, presentation or all");
  psi->add_flag("--check", check, "verify the presentation maps onto Psi");
  auto* fam = app.add_subcommand("family", "lattice family presentations");
  fam->add_option("--d", fd, "d")->check(CLI::PositiveNumber);
  fam->add_option("--n", fn, "n")->check(CLI::PositiveNumber);
  fam->add_option("--which", which, "pi, lambda, psi or dictionary");
  fam->add_flag("--verify", verify, "check the proposition for Lambda(d,n)");
  auto* chk = app.add_subcommand("check", "run a verification suite");
  chk->add_option("suite", suite, "suite name or all");
  chk->add_flag("--slow", slow, "include the expensive instances");
  auto* exp = app.add_subcommand("export", "export artifacts");
  add_instance_options(exp, in, false);
  exp->add_option("--what", what, "quiver, presentation, algebra, ar, projectives or injectives");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.prime = parse_field(cfg.field);
    if (md->count()) cfg.max_degree = max_degree;
    set_witness_seed(cfg.seed);
    Outcome out;
    std::string name;
    if (*parse) {
      name = "parse";
      out = cmd_parse(cfg, file);
    } else if (*pi) {
      name = "pi";
      out = cmd_pi(cfg, in, mode, check);
    } else if (*aus) {
      name = "auslander";
      out = cmd_auslander(cfg, in);
    } else if (*psi) {
      name = "psi";
      out = cmd_psi(cfg, in, psi_mode, check);
    } else if (*fam) {
      name = "family";
      out = cmd_family(cfg, fd, fn, which, verify);
    } else if (*chk) {
      name = "check";
      out = cmd_check(cfg, suite, slow);
    } else {
      name = "export";
      out = cmd_export(cfg, in, what);
    }
    if (cfg.output_dir.empty()) {
      std::cout << out.text;
    } else {
      std::filesystem::create_directories(cfg.output_dir);
      const auto path = std::filesystem::path(cfg.output_dir) / (name + "." + out.extension);
      std::ofstream(path) << out.text;
      std::cerr << "wrote " << path.string() << "\n";
    }
    return out.verified ? 0 : 1;
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
