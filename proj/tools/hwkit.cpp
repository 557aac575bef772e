// hwkit command-line front end.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "hwkit/bsdata.hpp"
#include "hwkit/ppd.hpp"
#include "hwkit/snc.hpp"
#include "hwkit/suite.hpp"
#include "hwkit/vforacle.hpp"
#include "hwkit/whom.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace hwkit;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 1, kHypothesis = 2, kInconclusive = 3 };

struct Envelope {
  std::string verb;
  json inputs = json::object();
  json bounds;  // null when the verb has no search bounds
  std::string provenance = "closed-form";
  json outputs = json::object();
  json certificates = json::array();
  std::string status = "ok";

  json to_json() const {
    json j;
    j["tool"] = "hwkit";
    j["version"] = kVersion;
    j["verb"] = verb;
    j["inputs"] = inputs;
    j["bounds"] = bounds;
    j["provenance"] = provenance;
    j["outputs"] = outputs;
    j["certificates"] = certificates;
    j["status"] = status;
    return j;
  }
};


// ------------------------------------------------------------------ options

struct Options {
  bool json_out = false;
  std::string poly, weights, exponents, b, alpha = "1", input, source, lmax = "auto", profile = "default";
  std::string l_text;
  int l = 0, k = 0, kmax = 0, order = -1, xdeg = -1, tord = 6;
  bool rho21 = false, verify = false, graded = false;
};

Bounds bounds_of(const Options& o, int order, int xdeg) {
  Bounds b;
  b.order = o.order >= 0 ? o.order : order;
  b.xdeg = o.xdeg >= 0 ? o.xdeg : xdeg;
  b.tord = o.tord;
  return b;
}

Rational parse_alpha(const std::string& text) {
  Rational a = Rational::parse(text);
  if (a.sign() < 0) throw CLI::ValidationError("--alpha", "must be non-negative");
  return a;
}

std::size_t poly_dim(const std::string& text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i + 1 < text.size(); ++i)
    if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1])))
      n = std::max<std::size_t>(n, std::stoul(text.substr(i + 1)));
  return n;
}

Polynomial read_poly(const Options& o) {
  if (o.poly.empty()) throw CLI::ValidationError("--poly", "required");
  std::size_t n = o.weights.empty() ? poly_dim(o.poly) : WeightVector::parse(o.weights).dim();
  return poly_parse(o.poly, std::max<std::size_t>(n, poly_dim(o.poly)));
}

// The divisor's b-function from whichever description was given.
struct BSource {
  BFunction b;
  std::size_t n = 0;
  json inputs = json::object();
};

BSource b_source(const Options& o) {
  BSource s;
  if (!o.b.empty()) {
    s.b.roots = parse_roots(o.b);
    s.n = o.poly.empty() ? 1 : poly_dim(o.poly);
    s.inputs["b"] = s.b.str();
    if (!o.poly.empty()) s.inputs["poly"] = o.poly;
    return s;
  }
  if (!o.exponents.empty()) {
    SncDivisor d = SncDivisor::parse(o.exponents);
    s.b = bfunction_snc(d.exponents());
    s.n = d.dim();
    s.inputs["exponents"] = d.exponents();
    return s;
  }
  Polynomial f = read_poly(o);
  s.n = f.dim();
  s.inputs["poly"] = f.str();
  if (f.terms().size() == 1) {
    std::vector<int> a(f.dim());
    const Monomial& m = f.leading_monomial();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = m[i];
    s.b = bfunction_snc(a);
    return s;
  }
  if (o.weights.empty()) throw CLI::ValidationError("--weights", "required for a non-monomial --poly");
  QuasiHomogeneousGerm g(f, WeightVector::parse(o.weights));
  s.inputs["weights"] = o.weights;
  s.b = bfunction_whom_isolated(g.f(), g.weights(), g.milnor());
  return s;
}

std::string provenance_of(const BFunction& b) {
  std::string p = to_string(b.provenance);
  return b.verified ? p + " (verified)" : p + " (unverified)";
}

json gens_json(const MonomialIdeal& I) {
  json a = json::array();
  for (const auto& m : I.generators()) a.push_back(m.str());
  return a;
}

json presentation_gens(const HodgePresentation& p) {
  json a = json::array();
  for (const auto& s : p.summands) a.push_back(s.generator.str());
  return a;
}

// --------------------------------------------------------------------- verbs

Envelope do_snc(const Options& o) {
  Envelope e;
  e.verb = "snc";
  SncDivisor d = SncDivisor::parse(o.exponents);
  Rational alpha = parse_alpha(o.alpha);
  e.inputs["exponents"] = d.exponents();
  e.inputs["alpha"] = alpha.str();
  e.inputs["kmax"] = o.kmax;
  e.inputs["lmax"] = o.lmax;
  // M(f^0) is presented as M(f^-1)
  if (alpha.is_zero()) {
    alpha = 1;
    e.outputs["alpha_normalized"] = alpha.str();
  }
  int top = snc_weight_top(d, alpha);
  int lmax = o.lmax == "auto" ? top : std::stoi(o.lmax);
  if (lmax < 0 || lmax > top)
    throw std::invalid_argument("--lmax " + std::to_string(lmax) + " outside [0," + std::to_string(top) + "]");
  e.outputs["weight_top"] = top;
  e.outputs["multiplier_ideal"] = snc_multiplier_ideal(d, alpha).str();
  json rows = json::array();
  for (int k = 0; k <= o.kmax; ++k)
    for (int l = 0; l <= lmax; ++l) {
      json r;
      r["k"] = k;
      r["l"] = l;
      if (k == 0) {
        r["generators"] = gens_json(snc_f0_ideal(d, alpha, l));
      } else {
        r["generators"] = presentation_gens(snc_hodge_weight(d, alpha, k, l));
      }
      r["presentation"] = to_json(snc_hodge_weight(d, alpha, k, l));
      rows.push_back(r);
    }
  e.outputs["rows"] = rows;
  return e;
}

Envelope do_whom(const Options& o) {
  Envelope e;
  e.verb = "whom";
  if (o.weights.empty()) throw CLI::ValidationError("--weights", "required");
  QuasiHomogeneousGerm g(read_poly(o), WeightVector::parse(o.weights));
  Rational alpha = parse_alpha(o.alpha);
  e.inputs["poly"] = g.f().str();
  e.inputs["weights"] = o.weights;
  e.inputs["alpha"] = alpha.str();
  e.inputs["k"] = o.k;
  e.inputs["l"] = o.l;
  json basis = json::array();
  for (const auto& m : g.milnor()) basis.push_back(m.str());
  e.outputs["milnor_basis"] = basis;
  e.outputs["weight_top"] = whom_weight_top(g, alpha);
  auto p = whom_hodge_weight(g, alpha, o.k, o.l);
  e.outputs["generators"] = presentation_gens(p);
  e.outputs["presentation"] = to_json(p);
  json mm = json::array();
  for (const auto& q : whom_micromult_ideal(g, alpha, o.k)) mm.push_back(q.str());
  e.outputs["micromultiplier_ideal"] = mm;
  return e;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--input", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Envelope do_ppd(const Options& o) {
  Envelope e;
  e.verb = "ppd";
  if (o.input.empty()) throw CLI::ValidationError("--input", "required");
  AnnihilatorInput inp;
  try {
    inp = parse_annihilator(slurp(o.input));
  } catch (const HypothesisError&) {
    throw;
  } catch (const std::invalid_argument& err) {
    throw CLI::ValidationError("--input", err.what());
  }
  Bounds b = bounds_of(o, 4, 10);
  e.inputs["input"] = fs::path(o.input).filename().string();
  e.inputs["f"] = inp.f.str();
  e.inputs["alpha"] = inp.alpha.str();
  e.inputs["b"] = inp.b.str();
  e.inputs["pp"] = inp.pp_asserted;
  e.inputs["l"] = o.l_text.empty() ? json(o.l) : json(o.l_text);
  e.inputs["k"] = o.k;
  e.inputs["rho21"] = o.rho21;
  e.bounds = b.json();
  PpdResult r;
  if (o.rho21) {
    std::optional<int> l;
    if (o.l_text != "full") l = o.l;
    r = hodge_rho21(inp, l, o.k, b);
  } else if (o.k < 0) {
    r = weight_module_generators(inp, o.l, b);
  } else {
    r = hodge_on_weight(inp, o.l, o.k, b);
  }
  e.outputs = r.json();
  e.outputs["gamma"] = gamma_ideal(inp).json();
  e.provenance = r.conditional ? "conditional" : "unconditional";
  e.status = r.inconclusive ? "inconclusive" : "ok";
  return e;
}

Envelope do_bfun(const Options& o) {
  Envelope e;
  e.verb = "bfun";
  BSource s = b_source(o);
  e.inputs = s.inputs;
  if (o.verify) {
    if (o.poly.empty() && o.exponents.empty()) throw CLI::ValidationError("--verify", "needs --poly or --exponents");
    Polynomial f = o.poly.empty() ? SncDivisor::parse(o.exponents).f() : read_poly(o);
    std::optional<WeightVector> w;
    if (!o.weights.empty()) w = WeightVector::parse(o.weights);
    Bounds b = bounds_of(o, 3, 6);
    e.bounds = b.json();
    auto chk = verify_bfunction(f, s.b.roots, b.order, b.xdeg, w);
    e.certificates.push_back(chk.certificate.json());
    for (const auto& [root, cert] : chk.divisors) {
      json c = cert.json();
      c["removed_root"] = root.str();
      e.certificates.push_back(c);
    }
    s.b.verified = chk.certificate.member() && chk.minimal_at_bound();
    if (!chk.certificate.member()) e.status = chk.certificate.verdict == Verdict::Refuted ? "refuted" : "inconclusive";
  }
  e.provenance = provenance_of(s.b);
  e.outputs["bfunction"] = to_json(s.b);
  e.outputs["reduced"] = reduce(s.b).str();
  return e;
}

Envelope do_verify(const Options& o) {
  Envelope e;
  e.verb = "verify bfun";
  Polynomial f = read_poly(o);
  if (o.b.empty()) throw CLI::ValidationError("--b", "required");
  RootMap roots = parse_roots(o.b);
  std::optional<WeightVector> w;
  if (!o.weights.empty()) w = WeightVector::parse(o.weights);
  Bounds b = bounds_of(o, 3, 6);
  e.inputs["poly"] = f.str();
  e.inputs["b"] = roots_str(roots);
  if (w) e.inputs["weights"] = o.weights;
  e.bounds = b.json();
  e.provenance = "user-supplied";
  auto chk = verify_bfunction(f, roots, b.order, b.xdeg, w);
  e.certificates.push_back(chk.certificate.json());
  json div = json::array();
  for (const auto& [root, cert] : chk.divisors) {
    json c = cert.json();
    c["removed_root"] = root.str();
    e.certificates.push_back(c);
    div.push_back({{"removed_root", root.str()}, {"verdict", to_string(cert.verdict)}});
  }
  e.outputs["functional_equation"] = to_string(chk.certificate.verdict);
  if (chk.witness) e.outputs["witness"] = chk.witness->str();
  e.outputs["divisors"] = div;
  e.outputs["minimal_at_bound"] = chk.minimal_at_bound();
  if (chk.certificate.verdict == Verdict::Refuted) e.status = "refuted";
  else if (!chk.certificate.member() || !chk.minimal_at_bound()) e.status = "inconclusive";
  return e;
}

Envelope do_classify(const Options& o) {
  Envelope e;
  e.verb = "classify";
  BSource s = b_source(o);
  Rational alpha = parse_alpha(o.alpha);
  e.inputs = s.inputs;
  e.inputs["alpha"] = alpha.str();
  e.provenance = provenance_of(s.b);
  auto pc = classify_pair(reduce(s.b), alpha);
  e.outputs["lc"] = pc.lc;
  e.outputs["plt"] = pc.plt;
  e.outputs["klt"] = pc.klt;
  e.outputs["note"] = pc.note;
  return e;
}

Envelope do_bounds(const Options& o) {
  Envelope e;
  e.verb = "bounds";
  BSource s = b_source(o);
  Rational alpha = parse_alpha(o.alpha);
  e.inputs = s.inputs;
  e.inputs["alpha"] = alpha.str();
  e.inputs["l"] = o.l;
  e.inputs["graded"] = o.graded;
  e.provenance = provenance_of(s.b);
  auto rb = reduce(s.b);
  auto [lo, hi] = weight_bounds(rb, alpha, static_cast<long>(s.n));
  e.outputs["weights"] = {lo, hi};
  e.outputs["genlevel"] = genlevel_bound(rb, alpha, o.l, static_cast<long>(s.n), o.graded);
  if (auto me = weighted_minimal_exponent(rb, o.l)) e.outputs["weighted_minimal_exponent"] = me->str();
  return e;
}

Envelope do_crosscheck(const Options& o) {
  Envelope e;
  e.verb = "crosscheck";
  Rational alpha = parse_alpha(o.alpha);
  Bounds b = bounds_of(o, 4, 12);
  e.inputs["source"] = o.source;
  e.inputs["alpha"] = alpha.str();
  e.inputs["k"] = o.k;
  e.inputs["l"] = o.l;
  e.bounds = b.json();
  CrosscheckResult r;
  if (o.source == "snc") {
    SncDivisor d = SncDivisor::parse(o.exponents);
    e.inputs["exponents"] = d.exponents();
    r = main_formula_crosscheck_snc(d, alpha, o.k, o.l, b);
  } else if (o.source == "whom") {
    if (o.weights.empty()) throw CLI::ValidationError("--weights", "required");
    QuasiHomogeneousGerm g(read_poly(o), WeightVector::parse(o.weights));
    e.inputs["poly"] = g.f().str();
    e.inputs["weights"] = o.weights;
    r = main_formula_crosscheck_whom(g, alpha, o.k, o.l, b);
  } else {
    throw CLI::ValidationError("--source", "must be snc or whom");
  }
  e.provenance = "certified-at-bound";
  e.outputs = r.json();
  e.certificates.push_back(r.kernel.json());
  e.certificates.push_back(r.forward.json());
  e.certificates.push_back(r.backward.json());
  if (!r.member()) e.status = "inconclusive";
  return e;
}

// -------------------------------------------------------------------- output

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, v] : j.items()) flatten(v, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !j.empty() && !std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& j, bool as_json) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    flatten(j, "", std::cout);
}

// Suggests the next bounds in a doubling schedule after an inconclusive run.
void suggest_escalation(const json& bounds) {
  if (!bounds.is_object() || !bounds.contains("order")) return;
  constexpr int kCeilingOrder = 16;
  int order = bounds["order"].get<int>();
  int xdeg = bounds["xdeg"].get<int>();
  if (2 * std::max(order, 1) > kCeilingOrder) {
    std::cerr << "inconclusive at the bound ceiling\n";
    return;
  }
  std::cerr << "inconclusive at order " << order << " / xdeg " << xdeg << "; retry with --order "
            << 2 * std::max(order, 1) << " --xdeg " << 2 * std::max(xdeg, 1) << "\n";
}

// --------------------------------------------------------------------- cache

std::optional<fs::path> cache_dir() {
  const char* dir = std::getenv("HWKIT_CACHE");
  if (!dir || !*dir) return std::nullopt;
  return fs::path(dir);
}

std::string cache_key_text(const std::string& verb, const std::vector<std::string>& args) {
  std::string t = std::string(kVersion) + "\n" + verb;
  for (const auto& a : args)
    if (a != "--json") t += "\n" + a;
  return t;
}

fs::path cache_file(const fs::path& dir, const std::string& key) {
  std::ostringstream h;
  h << std::hex << std::hash<std::string>{}(key);
  return dir / (h.str() + ".json");
}

std::optional<json> cache_lookup(const std::string& key) {
  auto dir = cache_dir();
  if (!dir) return std::nullopt;
  std::ifstream in(cache_file(*dir, key));
  if (!in) return std::nullopt;
  try {
    json entry = json::parse(in);
    if (entry.value("key", "") != key) return std::nullopt;
    return entry["envelope"];
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void cache_store(const std::string& key, const json& envelope) {
  auto dir = cache_dir();
  if (!dir) return;
  std::error_code ec;
  fs::create_directories(*dir, ec);
  fs::path target = cache_file(*dir, key);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    json entry;
    entry["key"] = key;
    entry["envelope"] = envelope;
    out << entry.dump();
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

// ---------------------------------------------------------------------- main

int run_suite_verb(const Options& o) {
  auto profile = parse_profile(o.profile);
  if (!profile) {
    std::cerr << "unknown profile '" << o.profile << "' (default, corrupted-candidate, bounds-starved)\n";
    return kUsage;
  }
  auto progress = [&](const CriterionResult& r) {
    if (!o.json_out)
      std::cerr << "[" << r.id << "] " << to_string(r.status) << "  " << r.title << "\n";
  };
  SuiteReport rep = run_suite(*profile, progress);
  Envelope e;
  e.verb = "suite";
  e.inputs["profile"] = to_string(*profile);
  e.provenance = "acceptance-suite";
  e.outputs = rep.json();
  int code = rep.exit_code();
  e.status = code == kOk ? "ok" : code == kInconclusive ? "inconclusive" : "failed";
  if (o.json_out) {
    emit(e.to_json(), true);
  } else {
    for (const auto& r : rep.results) {
      std::cout << (*profile == SuiteProfile::Default ? "criterion " : "check ") << r.id << ": " << to_string(r.status) << " (" << r.title << ")\n";
      for (const auto& d : r.details)
        if (d.rfind("ok: ", 0) != 0) std::cout << "  " << d << "\n";
    }
    std::cout << "status: " << e.status << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hwkit: Hodge and weight filtrations on twisted localizations"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Options o;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", o.json_out, "Machine-readable output"); };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--order", o.order, "Operator-order bound");
    c->add_option("--xdeg", o.xdeg, "Polynomial-degree bound");
  };
  auto add_b_source = [&](CLI::App* c) {
    c->add_option("--poly", o.poly, "Polynomial, e.g. \"x1^2+x2^3\"");
    c->add_option("--weights", o.weights, "Weights, e.g. 1/2,1/3");
    c->add_option("--exponents", o.exponents, "SNC exponents, e.g. 2,3");
    c->add_option("--b", o.b, "b-function, e.g. \"(s+1)^2\"");
  };

  auto* snc = app.add_subcommand("snc", "Hodge and weight table of a monomial divisor");
  snc->add_option("--exponents", o.exponents, "Exponents a_i")->required();
  snc->add_option("--alpha", o.alpha, "Twist alpha");
  snc->add_option("--lmax", o.lmax, "Largest weight index, or auto");
  snc->add_option("--kmax", o.kmax, "Largest Hodge index")->check(CLI::NonNegativeNumber);
  add_json(snc);

  auto* whom = app.add_subcommand("whom", "Filtrations for a weighted-homogeneous isolated singularity");
  whom->add_option("--poly", o.poly)->required();
  whom->add_option("--weights", o.weights)->required();
  whom->add_option("--alpha", o.alpha);
  whom->add_option("--k", o.k)->check(CLI::NonNegativeNumber);
  whom->add_option("--l", o.l)->check(CLI::NonNegativeNumber);
  add_json(whom);

  auto* ppd = app.add_subcommand("ppd", "Weight and Hodge generators from an annihilator presentation");
  ppd->add_option("--input", o.input, "Annihilator file")->required();
  ppd->add_option("--l", o.l_text, "Weight index (\"full\" with --rho21)");
  o.k = -1;
  ppd->add_option("--k", o.k, "Hodge index; omit for the weight module");
  ppd->add_flag("--rho21", o.rho21, "Use the untwisted formula with E+1");
  add_bounds(ppd);
  add_json(ppd);

  auto* bfun = app.add_subcommand("bfun", "Closed-form b-function");
  add_b_source(bfun);
  bfun->add_flag("--verify", o.verify, "Certify the closed form");
  add_bounds(bfun);
  add_json(bfun);

  auto* verify = app.add_subcommand("verify", "Certify a claimed b-function");
  verify->require_subcommand(1);
  auto* vb = verify->add_subcommand("bfun", "Functional equation and maximal divisors");
  vb->add_option("--poly", o.poly)->required();
  vb->add_option("--b", o.b)->required();
  vb->add_option("--weights", o.weights);
  add_bounds(vb);
  add_json(vb);

  auto* classify = app.add_subcommand("classify", "klt/plt/lc classification of (X, alpha D)");
  add_b_source(classify);
  classify->add_option("--alpha", o.alpha);
  add_json(classify);

  auto* bounds = app.add_subcommand("bounds", "Weight and generating-level bounds");
  add_b_source(bounds);
  bounds->add_option("--alpha", o.alpha);
  bounds->add_option("--l", o.l)->check(CLI::NonNegativeNumber);
  bounds->add_flag("--graded", o.graded);
  add_json(bounds);

  auto* cross = app.add_subcommand("crosscheck", "Master-formula cross-check at bounds");
  cross->add_option("--source", o.source)->required()->check(CLI::IsMember({"snc", "whom"}));
  cross->add_option("--exponents", o.exponents);
  cross->add_option("--poly", o.poly);
  cross->add_option("--weights", o.weights);
  cross->add_option("--alpha", o.alpha);
  cross->add_option("--k", o.k)->check(CLI::NonNegativeNumber);
  cross->add_option("--l", o.l)->check(CLI::NonNegativeNumber);
  cross->add_option("--tord", o.tord, "d_t-order bound");
  add_bounds(cross);
  add_json(cross);

  auto* suite = app.add_subcommand("suite", "Run the acceptance battery");
  suite->add_option("profile,--profile", o.profile, "default | corrupted-candidate | bounds-starved");
  add_json(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  std::string verb = cmd->get_name();
  if (verb == "suite") return run_suite_verb(o);
  if (cmd == ppd && !o.l_text.empty() && o.l_text != "full") {
    try {
      o.l = std::stoi(o.l_text);
    } catch (const std::exception&) {
      std::cerr << "--l: expected an integer or \"full\"\n";
      return kUsage;
    }
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  std::string key = cache_key_text(verb, args);
  std::optional<json> env = cache_lookup(key);
  try {
    if (!env) {
      Envelope e;
      if (cmd == snc) e = do_snc(o);
      else if (cmd == whom) e = do_whom(o);
      else if (cmd == ppd) e = do_ppd(o);
      else if (cmd == bfun) e = do_bfun(o);
      else if (cmd == verify) e = do_verify(o);
      else if (cmd == classify) e = do_classify(o);
      else if (cmd == bounds) e = do_bounds(o);
      else e = do_crosscheck(o);
      env = e.to_json();
      cache_store(key, *env);
    }
  } catch (const CLI::ValidationError& err) {
    std::cerr << err.what() << "\n";
    return kUsage;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return kUsage;
  } catch (const HypothesisError& err) {
    for (const auto& v : err.violations()) std::cerr << "hypothesis violated: " << v << "\n";
    return kHypothesis;
  } catch (const NotQuasiHomogeneous& err) {
    std::cerr << "hypothesis violated: f is not weighted homogeneous for the given weights: " << err.what() << "\n";
    return kHypothesis;
  } catch (const NotIsolated& err) {
    std::cerr << "hypothesis violated: the singularity is not isolated: " << err.what() << "\n";
    return kHypothesis;
  } catch (const std::invalid_argument& err) {
    std::cerr << "precondition violated: " << err.what() << "\n";
    return kHypothesis;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  }

  emit(*env, o.json_out);
  std::string status = (*env)["status"].get<std::string>();
  if (status == "inconclusive") {
    suggest_escalation((*env)["bounds"]);
    return kInconclusive;
  }
  if (status == "refuted") return kHypothesis;
  return kOk;
}
