#include "socle3_cli/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <regex>
#include <sstream>
#include <thread>

#include <gmp.h>

#include "CLI11.hpp"
#include "socle3/apolarity.hpp"
#include "socle3/deformation.hpp"
#include "socle3/error.hpp"
#include "socle3/parser.hpp"
#include "socle3/random_cubic.hpp"
#include "socle3/resolution.hpp"
#include "socle3/series.hpp"
#include "socle3/structure.hpp"

namespace socle3::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

// Integral coefficients as numbers, the rest as "p/q" strings.
Json rational_json(const Rational& q) {
  if (is_integer(q)) return integer_json(q.get_num());
  return Json(to_string(q));
}

Json series_json(const IntSeries& s) {
  Json a = Json::array();
  for (const auto& c : s) a.push_back(integer_json(c));
  return a;
}

Json series_json(const QSeries& s) {
  Json a = Json::array();
  for (const auto& c : s) a.push_back(rational_json(c));
  return a;
}

Json function_json(const RationalFunction& f) {
  return Json{{"num", series_json(f.numerator())}, {"den", series_json(f.denominator())}, {"text", f.to_string()}};
}

std::string list_text(const Json& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += a[i].is_string() ? a[i].get<std::string>() : a[i].dump();
  }
  return s + "]";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

ResolutionOptions resolution_options(const RunConfig& c) {
  ResolutionOptions o;
  o.max_ambient = c.max_ambient;
  return o;
}

void require_h(const RunConfig& c) {
  if (c.h == 0) throw PreconditionError("--h must be a positive number of variables");
}

void require_n(const RunConfig& c) {
  if (!c.has_n || c.n == 0) throw PreconditionError("--n must be a positive number of variables");
}

void require_order(const RunConfig& c) {
  if (c.betti_order > kMaxBettiOrder)
    throw PreconditionError("--N exceeds the hard cap " + std::to_string(kMaxBettiOrder));
}

// "0,1,-1,2,1/2"; malformed entries are parse errors.
std::vector<Rational> parse_samples(const std::string& text) {
  static const std::regex number(R"(\s*(-?\d+)(/(\d+))?\s*)");
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch m;
    if (!std::regex_match(item, m, number)) throw ParseError("malformed b sample \"" + item + "\"", start);
    Integer num(m[1].str());
    Integer den(m[3].matched ? m[3].str() : std::string("1"));
    if (den == 0) throw ParseError("zero denominator in b sample", start);
    Rational q(num, den);
    q.canonicalize();
    out.push_back(q);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// Fit degree bound and the number of Betti coefficients needed to use it.
struct FitPlan {
  int max_degree;
  std::size_t order;
};

FitPlan fit_plan(std::size_t N) {
  const int deg = std::clamp(static_cast<int>(N) - 1, 4, 8) / 2;
  return {deg, std::max<std::size_t>(N, 2 * deg + 1)};
}

std::optional<std::size_t> first_mismatch(const QSeries& a, const IntSeries& b) {
  for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k)
    if (a[k] != Rational(b[k])) return k;
  return std::nullopt;
}

struct TrialOutcome {
  Json record;
  bool lemma = false;
  bool hf_ok = false;
  bool theorem = false;
  std::optional<bool> flat;
};

TrialOutcome run_trial(std::size_t index, const Polynomial& cubic, std::size_t n, std::size_t h, std::size_t N,
                       const ResolutionOptions& opts) {
  TrialOutcome t;
  const Polynomial sigma = solve_sigma(cubic, n);
  t.lemma = verify_structure_lemma(cubic, n, h, sigma);
  const Polynomial F = normal_form_dual(cubic, n, h);
  const LocalAlgebra A = algebra_from_dual(F);
  const auto hf = hilbert_function(A);
  t.hf_ok = hf == HilbertFunction{1, static_cast<int>(h), static_cast<int>(n), 1};
  const IntSeries direct = betti_numbers(A, N, opts).values;
  const IntSeries q0b = betti_numbers(q0(F), N, opts).values;
  const auto predicted = main_theorem_prediction(q0b, h, n, N);
  t.theorem = predicted && *predicted == to_rational(direct);
  if (n < h) t.flat = check_flat_family(FamilySpec{n, h, cubic, sigma}).all_checks_pass;
  t.record = Json{{"index", index},
                  {"cubic", print_poly(cubic)},
                  {"sigma", print_poly(sigma)},
                  {"lemma_verified", t.lemma},
                  {"hf", hf},
                  {"direct", series_json(direct)},
                  {"theorem_identity", t.theorem},
                  {"flat_family", t.flat ? Json(*t.flat) : Json(nullptr)}};
  return t;
}

}  // namespace

Report cmd_ann(const RunConfig& c) {
  require_h(c);
  const Polynomial F = parse_poly(c.f, VarSpace::Dual, c.h);
  const LocalAlgebra A = algebra_from_dual(F);
  const auto hf = hilbert_function(A);
  const std::size_t soc = socle(A).rank();
  Report r;
  r.result = Json{{"dim", A.dim()}, {"hf", hf}, {"socle_dim", soc}, {"gorenstein", soc == 1}};
  r.lines = {"dim = " + std::to_string(A.dim()), "hf = " + list_text(r.result["hf"]),
             "socle_dim = " + std::to_string(soc), "gorenstein = " + bool_text(soc == 1)};
  return r;
}

Report cmd_structure(const RunConfig& c) {
  require_n(c);
  require_h(c);
  const Polynomial cubic = parse_poly(c.f3, VarSpace::Dual, c.n);
  const StructureData s = build_structure(cubic, c.n, c.h);
  const auto gens = structure_generators(cubic, c.n, c.h, s.sigma);
  const bool lemma = verify_structure_lemma(cubic, c.n, c.h, s.sigma);
  Report r;
  Json g = Json::array();
  for (const auto& p : gens) g.push_back(print_poly(p));
  r.result = Json{{"n", c.n},
                  {"h", c.h},
                  {"sigma", print_poly(s.sigma)},
                  {"branch", c.n == c.h ? "annihilator" : "normal_form"},
                  {"generators", g},
                  {"ideal_codim", s.ideal.basis.codim()},
                  {"lemma_verified", lemma}};
  r.lines.push_back("sigma = " + print_poly(s.sigma));
  r.lines.push_back(std::string("branch = ") + (c.n == c.h ? "annihilator" : "normal_form"));
  r.lines.push_back("generators:");
  for (const auto& p : gens) r.lines.push_back("  " + print_poly(p));
  r.lines.push_back("lemma_verified = " + bool_text(lemma));
  return r;
}

Report cmd_poincare(const RunConfig& c) {
  require_h(c);
  require_order(c);
  const std::size_t N = c.betti_order;
  const Polynomial F = parse_poly(c.f, VarSpace::Dual, c.h);
  const LocalAlgebra A = algebra_from_dual(F);
  const auto hf = hilbert_function(A);
  const auto opts = resolution_options(c);
  const FitPlan plan = fit_plan(N);
  const IntSeries full = betti_numbers(A, plan.order, opts).values;
  const IntSeries direct(full.begin(), full.begin() + N + 1);

  Report r;
  r.result["dim"] = A.dim();
  r.result["hf"] = hf;
  r.result["N"] = N;
  r.result["direct"] = series_json(direct);
  r.lines.push_back("dim = " + std::to_string(A.dim()));
  r.lines.push_back("hf = " + list_text(r.result["hf"]));
  r.lines.push_back("direct = " + list_text(r.result["direct"]));

  const char* selected = c.as_displayed ? "as_displayed" : "proof_consistent";
  if (F.degree() == 3) {
    const std::size_t h = hf[1], n = hf[2];
    const IntSeries q0b = betti_numbers(q0(F), N, opts).values;
    r.result["embedding_dim"] = h;
    r.result["n"] = n;
    r.result["q0_betti"] = series_json(q0b);
    Json preds = Json::object();
    for (auto [name, variant] : {std::pair{"proof_consistent", FormulaVariant::ProofConsistent},
                                 std::pair{"as_displayed", FormulaVariant::AsDisplayed}}) {
      const auto p = main_theorem_prediction(q0b, h, n, N, variant);
      Json e;
      if (!p) {
        e = Json{{"series", nullptr}, {"matches", false}, {"first_mismatch", nullptr},
                 {"reason", "denominator not invertible (h - n = 1)"}};
        r.lines.push_back(std::string(name) + " = undefined (h - n = 1)");
      } else {
        const auto mm = first_mismatch(*p, direct);
        e = Json{{"series", series_json(*p)}, {"matches", !mm}, {"first_mismatch", mm ? Json(*mm) : Json(nullptr)}};
        if (mm && n == 1 && h > 1)
          e["reason"] = "Q(0) is a hypersurface of embedding dimension 1, where the Gorenstein socle formula fails";
        r.lines.push_back(std::string(name) + " = " + list_text(e["series"]) + " matches = " + bool_text(!mm));
      }
      preds[name] = e;
    }
    r.result["predictions"] = preds;
    r.result["selected_variant"] = selected;
    r.result["selected_matches"] = preds[selected]["matches"];

    // Numerical Koszulness of Q(0), and the closed form it implies.
    // Q(0) has Hilbert function (1, n, n, 1).
    const Rational nq(static_cast<long>(n));
    const QSeries hminus{Rational(1), -nq, nq, Rational(-1)};
    QSeries one(N + 1, Rational(0));
    one[0] = 1;
    const bool koszul = series_mul(to_rational(q0b), hminus, N) == one;
    Json k{{"q0_koszul", koszul}};
    const FormulaVariant v = c.as_displayed ? FormulaVariant::AsDisplayed : FormulaVariant::ProofConsistent;
    try {
      const RationalFunction kf = koszul_formula(h, n, v);
      k["formula"] = function_json(kf);
      k["matches"] = series_expand(kf, N) == direct;
    } catch (const PreconditionError& e) {
      k["formula"] = nullptr;
      k["matches"] = false;
    }
    r.result["koszul"] = k;
    r.lines.push_back("q0_koszul = " + bool_text(koszul));
  } else {
    r.result["predictions"] = nullptr;
    r.result["selected_variant"] = selected;
    r.result["selected_matches"] = nullptr;
    r.result["koszul"] = nullptr;
    r.lines.push_back("predictions = not applicable (socle degree " + std::to_string(F.degree()) + ")");
  }

  const auto fit = fit_rational(full, plan.max_degree);
  r.result["fit"] = fit ? function_json(*fit) : Json(nullptr);
  r.lines.push_back("fit = " + (fit ? fit->to_string() : std::string("none")));

  const auto socle_report = verify_socle_formulas(A, N, opts);
  Json sf = Json::object();
  for (auto [name, chk] : {std::pair<const char*, const SocleFormulaCheck*>{"linear_socle", &socle_report.linear_socle},
                           std::pair<const char*, const SocleFormulaCheck*>{"gorenstein", &socle_report.gorenstein}}) {
    sf[name] = Json{{"applicable", chk->applicable},
                    {"reason", chk->applicable ? Json(nullptr) : Json(chk->reason)},
                    {"quotient_betti", chk->applicable ? series_json(chk->quotient) : Json(nullptr)},
                    {"holds", chk->applicable ? Json(chk->holds) : Json(nullptr)}};
    r.lines.push_back(std::string(name) + "_formula = " +
                      (chk->applicable ? bool_text(chk->holds) : "not applicable (" + chk->reason + ")"));
  }
  r.result["socle_formulas"] = sf;
  return r;
}

Report cmd_deform(const RunConfig& c) {
  require_n(c);
  require_h(c);
  const Polynomial cubic = parse_poly(c.f3, VarSpace::Dual, c.n);
  const auto samples = parse_samples(c.b_samples);
  check_cubic(cubic, c.n);
  FamilySpec spec{c.n, c.h, cubic, solve_sigma(cubic, c.n), samples};
  validate(spec);
  const FlatFamilyReport rep = check_flat_family(spec);

  Report r;
  Json fibers = Json::array();
  auto row = [](std::string b, std::string dim, std::string stab, std::string cop, std::string inter,
                std::string split) {
    std::ostringstream out;
    out << std::left << std::setw(8) << b << std::setw(6) << dim << std::setw(12) << stab << std::setw(9) << cop
        << std::setw(14) << inter << split;
    return out.str();
  };
  r.lines.push_back(row("b", "dim", "stabilized", "coprime", "intersection", "split"));
  for (const auto& f : rep.fibers) {
    const bool special = f.b == 0;
    auto opt = [&](bool v) { return special ? Json(nullptr) : Json(v); };
    fibers.push_back(Json{{"b", to_string(f.b)},
                          {"dimension", f.fiber_dimension},
                          {"truncation", f.truncation_used},
                          {"stabilized", f.stabilized},
                          {"coprime", opt(f.coprime)},
                          {"intersection", opt(f.intersection_verified)},
                          {"split", opt(f.split_dimension_check)},
                          {"residual_dimension", special ? Json(nullptr) : Json(f.residual_dimension)}});
    auto cell = [&](bool v) { return special ? std::string("-") : bool_text(v); };
    std::string split = cell(f.split_dimension_check);
    if (!special)
      split += " (" + std::to_string(f.fiber_dimension) + " = 1+" + std::to_string(f.residual_dimension) + ")";
    r.lines.push_back(row(to_string(f.b), std::to_string(f.fiber_dimension), bool_text(f.stabilized),
                          cell(f.coprime), cell(f.intersection_verified), split));
  }
  r.result = Json{{"n", c.n},
                  {"h", c.h},
                  {"sigma", print_poly(spec.sigma)},
                  {"expected_dimension", 2 + c.h + c.n},
                  {"fibers", fibers},
                  {"constant_length", rep.constant_length},
                  {"special_fiber_matches", rep.special_fiber_matches},
                  {"all_checks_pass", rep.all_checks_pass}};
  r.lines.push_back("constant_length = " + bool_text(rep.constant_length));
  r.lines.push_back("special_fiber_matches = " + bool_text(rep.special_fiber_matches));
  r.lines.push_back("all_checks_pass = " + bool_text(rep.all_checks_pass));
  return r;
}

Report cmd_random(const RunConfig& c) {
  Report r;
  const std::size_t n = c.has_n ? c.n : 3;
  const std::size_t h = c.h ? c.h : n + 1;
  if (c.trials > 0) {
    if (n == 0) throw PreconditionError("--n must be positive");
    if (h < n) throw PreconditionError("need n <= h");
    require_order(c);
  }
  // Cubics are drawn up front so the sequence depends only on the seed.
  std::mt19937_64 rng(c.seed);
  std::vector<Polynomial> cubics;
  for (std::size_t i = 0; i < c.trials; ++i) cubics.push_back(random_cubic(n, rng));

  std::vector<std::optional<TrialOutcome>> outcomes(c.trials);
  std::vector<std::exception_ptr> errors(c.trials);
  std::atomic<std::size_t> next{0};
  const auto opts = resolution_options(c);
  auto worker = [&] {
    for (std::size_t i; (i = next++) < c.trials;) {
      try {
        outcomes[i] = run_trial(i, cubics[i], n, h, c.betti_order, opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(c.trials, std::max(1u, std::thread::hardware_concurrency()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t lemma = 0, hf_ok = 0, theorem = 0, flat = 0, flat_applicable = 0;
  Json trials = Json::array();
  for (const auto& o : outcomes) {
    lemma += o->lemma;
    hf_ok += o->hf_ok;
    theorem += o->theorem;
    if (o->flat) {
      ++flat_applicable;
      flat += *o->flat;
    }
    trials.push_back(o->record);
  }
  r.result = Json{{"n", n},
                  {"h", h},
                  {"seed", c.seed},
                  {"trials", trials},
                  {"summary",
                   Json{{"trials", c.trials},
                        {"lemma_verified", lemma},
                        {"hf_shape", hf_ok},
                        {"theorem_identity", theorem},
                        {"flat_family", flat},
                        {"flat_family_applicable", flat_applicable}}}};
  const std::string total = "/" + std::to_string(c.trials);
  r.lines = {"trials = " + std::to_string(c.trials),
             std::to_string(lemma) + total + " lemma verified",
             std::to_string(hf_ok) + total + " Hilbert function (1,h,n,1)",
             std::to_string(theorem) + total + " theorem identity",
             std::to_string(flat) + "/" + std::to_string(flat_applicable) + " flat-family checks"};
  for (const auto& o : outcomes) {
    if (o->lemma && o->hf_ok && o->theorem && o->flat.value_or(true)) continue;
    r.lines.push_back("failure witness: trial " + o->record["index"].dump() + " cubic " +
                      o->record["cubic"].get<std::string>());
  }
  return r;
}

Report run(const RunConfig& c) {
  if (c.command == "ann") return cmd_ann(c);
  if (c.command == "structure") return cmd_structure(c);
  if (c.command == "poincare") return cmd_poincare(c);
  if (c.command == "deform") return cmd_deform(c);
  if (c.command == "random") return cmd_random(c);
  throw PreconditionError("unknown command \"" + c.command + "\"");
}

Json config_json(const RunConfig& c) {
  Json j{{"h", c.h}, {"n", c.has_n ? Json(c.n) : Json(nullptr)}};
  if (c.command == "ann" || c.command == "poincare") j["f"] = c.f;
  if (c.command == "structure" || c.command == "deform") j["f3"] = c.f3;
  if (c.command == "poincare" || c.command == "random") j["N"] = c.betti_order;
  if (c.command == "deform") j["b"] = c.b_samples;
  if (c.command == "random") {
    j["trials"] = c.trials;
    j["seed"] = c.seed;
  }
  j["max_dim"] = c.max_ambient;
  j["variant"] = c.as_displayed ? "as_displayed" : "proof_consistent";
  return j;
}

Json versions_json() { return Json{{"socle3", kVersion}, {"gmp", gmp_version}}; }

std::string render_json(const RunConfig& c, const Report& r) {
  Json doc{{"command", c.command}, {"config", config_json(c)}, {"result", r.result}, {"versions", versions_json()}};
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::string s;
  for (const auto& l : r.lines) s += l + "\n";
  return s;
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Inverse-system computations for Gorenstein algebras of socle degree at most 3", "socle3"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "text";
  std::size_t n = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-dim", c.max_ambient, "Resource guard on the syzygy ambient dimension");
  };
  auto* ann = app.add_subcommand("ann", "Annihilator ideal, Hilbert function and socle of R/Ann(F)");
  ann->add_option("--h", c.h, "Number of variables")->required();
  ann->add_option("--f", c.f, "Dual generator in y1..yh")->required();
  common(ann);

  auto* structure = app.add_subcommand("structure", "Normal-form ideal of a socle-degree-3 algebra");
  structure->add_option("--n", n, "Variables of the cubic part")->required();
  structure->add_option("--h", c.h, "Embedding dimension")->required();
  structure->add_option("--f3", c.f3, "Non-degenerate cubic in y1..yn")->required();
  common(structure);

  auto* poincare = app.add_subcommand("poincare", "Betti numbers of the residue field and Poincare series");
  poincare->add_option("--h", c.h, "Number of variables")->required();
  poincare->add_option("--f", c.f, "Dual generator in y1..yh")->required();
  poincare->add_option("--N", c.betti_order, "Homological order")->capture_default_str();
  poincare->add_flag("--as-displayed", c.as_displayed, "Select the formula variant without the factor z");
  common(poincare);

  auto* deform = app.add_subcommand("deform", "Flat one-parameter family through the normal form");
  deform->add_option("--n", n, "Variables of the cubic part")->required();
  deform->add_option("--h", c.h, "Embedding dimension")->required();
  deform->add_option("--f3", c.f3, "Non-degenerate cubic in y1..yn")->required();
  deform->add_option("--b", c.b_samples, "Comma-separated rational parameter samples")->capture_default_str();
  common(deform);

  auto* random = app.add_subcommand("random", "Seeded random cubics through every pipeline");
  random->add_option("--n", n, "Variables of the cubic part (default 3)");
  random->add_option("--h", c.h, "Embedding dimension (default n+1)");
  random->add_option("--trials", c.trials, "Number of random cubics")->capture_default_str();
  random->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  random->add_option("--N", c.betti_order, "Homological order")->capture_default_str();
  common(random);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "socle3: " << e.what() << "\n";
    return kExitParse;
  }
  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    const auto* opt = sub->get_option_no_throw("--n");
    c.has_n = opt && opt->count() > 0;
  }
  c.n = n;
  c.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;

  try {
    const Report r = run(c);
    std::cout << (c.format == OutputFormat::Json ? render_json(c, r) : render_text(r));
    return kExitOk;
  } catch (const ParseError& e) {
    std::cerr << "socle3: parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    std::cerr << "socle3: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    std::cerr << "socle3: resource limit: " << e.what() << "\n";
    return kExitResource;
  }
}

}  // namespace socle3::cli
