#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iomanip>
#include <sstream>

#include "acurv/curvature.hpp"
#include "acurv/errors.hpp"
#include "acurv/json_io.hpp"
#include "acurv/osserman.hpp"
#include "acurv/schur.hpp"
#include "acurv/young.hpp"

namespace acurv::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string show(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += to_string(v[i]);
  }
  return s + ")";
}

std::string show_roots(const std::vector<std::pair<Rational, int>>& roots) {
  std::string s;
  for (const auto& [r, m] : roots) {
    if (!s.empty()) s += ", ";
    s += to_string(r) + " (x" + std::to_string(m) + ")";
  }
  return s.empty() ? "none" : s;
}

std::string show_set(const std::vector<Rational>& values) {
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += to_string(values[i]);
  }
  return s + "}";
}

void print_matrix(std::ostream& out, const Matrix& m, const std::string& indent = "  ") {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << std::setw(4) << to_string(m(i, j));
    }
    out << "]\n";
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void write_file(const std::string& path, const Json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError(path + ": cannot open for writing");
  f << j.dump(2) << "\n";
  if (!f) throw ParseError(path + ": write failed");
}

// A JSON literal, or "@path" to read it from a file.
Json json_argument(const std::string& text, const std::string& what) {
  if (!text.empty() && text[0] == '@') return read_json_file(text.substr(1));
  return parse_json(text, what);
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "1" || s == "+1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw ParseError("--sign: expected + or -, got \"" + s + "\"");
}

// ---- identities -----------------------------------------------------------

struct IdentitiesOptions {
  bool json = false;
  bool inject_fault = false;
};

int cmd_identities(const IdentitiesOptions& opt, std::ostream& out) {
  CanonicalElements elements = canonical_elements();
  if (opt.inject_fault) {
    // Test hook: perturb one coefficient of sigma_-1.
    const auto& [p, c] = *elements.sigma_minus.terms().begin();
    elements.sigma_minus.add(p, c);
  }
  auto table = std::async(std::launch::async, [&elements] { return verify_identity_table(elements); });
  std::vector<std::future<IdentityCheck>> idempotents;
  for (int u = 0; u <= 2; ++u) {
    idempotents.push_back(std::async(std::launch::async, [u] {
      const GroupRingElement e = derivative_idempotent(u);
      IdentityCheck check;
      check.name = "e_t e_t (u=" + std::to_string(u) + ", S_" + std::to_string(u + 4) + ")";
      check.expected = "e_t";
      check.pass = ring_product(e, e) == e;
      return check;
    }));
  }
  std::vector<IdentityCheck> checks = table.get();
  for (auto& f : idempotents) checks.push_back(f.get());

  bool ok = true;
  for (const auto& c : checks) ok = ok && c.pass;
  if (opt.json) {
    Json arr = Json::array();
    for (const auto& c : checks) {
      arr.push_back(Json{{"name", c.name}, {"expected", c.expected}, {"pass", c.pass}});
    }
    emit(out, Json{{"checks", std::move(arr)}, {"ok", ok}});
  } else {
    for (const auto& c : checks) {
      out << verdict(c.pass) << "  " << c.name << " = " << c.expected << "\n";
    }
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass ? 1 : 0;
    out << passed << "/" << checks.size() << " identities hold\n";
  }
  return ok ? kOk : kVerificationFailed;
}

// ---- check-curvature ------------------------------------------------------

struct CheckOptions {
  std::string path;
  bool json = false;
};

int cmd_check_curvature(const CheckOptions& opt, std::ostream& out) {
  const DenseTensor t = decode_tensor(read_json_file(opt.path));
  if (t.order() != 4) throw ParseError(opt.path + ": expected an order-4 tensor");
  const CurvatureCheck c = check_algebraic_curvature(t);
  if (opt.json) {
    Json j{{"pair_symmetries", c.pair_symmetries},
           {"bianchi", c.bianchi},
           {"young_criterion", c.young_criterion},
           {"bianchi_defect_nonzeros", c.bianchi_defect_nonzeros},
           {"algebraic_curvature", c.ok()}};
    if (!c.first_violation.empty()) j["first_violation"] = c.first_violation;
    emit(out, j);
  } else {
    out << "pair symmetries        " << verdict(c.pair_symmetries) << "\n";
    out << "first Bianchi identity " << verdict(c.bianchi) << "\n";
    out << "y* T = 12 T            " << verdict(c.young_criterion) << "\n";
    out << "Bianchi defect nonzero entries: " << c.bianchi_defect_nonzeros << "\n";
    if (!c.first_violation.empty()) out << "first violation: " << c.first_violation << "\n";
    out << "algebraic curvature tensor: " << verdict(c.ok()) << "\n";
  }
  return c.ok() ? kOk : kVerificationFailed;
}

// ---- decompose ------------------------------------------------------------

struct DecomposeOptions {
  std::string path;
  std::string mode = "mixed";
  std::string out_path;
  bool epsilon_form = false;
};

int cmd_decompose(const DecomposeOptions& opt, std::ostream& out) {
  const DenseTensor t = decode_tensor(read_json_file(opt.path));
  if (t.order() != 4) throw ParseError(opt.path + ": expected an order-4 tensor");
  if (!is_algebraic_curvature(t)) {
    throw DomainError(opt.path + ": not an algebraic curvature tensor");
  }
  CurvatureDecomposition d;
  if (opt.mode == "mixed") {
    d = decompose_mixed(t);
  } else if (opt.mode == "gamma") {
    d = decompose_pure(t, DecompositionKind::pure_gamma);
  } else if (opt.mode == "alpha") {
    d = decompose_pure(t, DecompositionKind::pure_alpha);
  } else {
    throw ParseError("--mode: expected mixed, gamma or alpha");
  }
  const Json encoded = encode(d);
  // Verify what is actually emitted, not the in-memory object.
  const bool round_trip = decode_decomposition(parse_json(encoded.dump())).reconstruct() == t;

  if (!opt.out_path.empty()) {
    if (round_trip) write_file(opt.out_path, encoded);
    out << "kind: " << to_string(d.kind) << "\n";
    out << "gamma terms: " << d.gamma_terms.size() << ", alpha terms: " << d.alpha_terms.size() << "\n";
  } else if (!opt.epsilon_form) {
    emit(out, encoded);
  }
  if (opt.epsilon_form) {
    out << "epsilon form (floating point, display only):\n";
    for (const auto& term : epsilon_form(d)) {
      out << (term.sign > 0 ? "+ " : "- ") << (term.is_gamma ? "gamma" : "alpha") << "\n";
      for (const auto& row : term.matrix) {
        out << "    [";
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (j) out << ", ";
          out << std::setprecision(6) << row[j];
        }
        out << "]\n";
      }
    }
  }
  if (!opt.out_path.empty() || opt.epsilon_form) {
    out << "reconstruction: " << verdict(round_trip) << "\n";
  }
  return round_trip ? kOk : kVerificationFailed;
}

// ---- schur ----------------------------------------------------------------

int print_sum(const SchurSum& s, bool json, std::ostream& out) {
  if (json) {
    emit(out, encode(s));
  } else {
    out << s.to_string() << "\n";
  }
  return kOk;
}

struct SchurOptions {
  std::string lambda;
  std::string mu;
  std::string kind;
  int n = 0;
  std::string ideal;
  bool json = false;
};

int cmd_lr(const SchurOptions& opt, std::ostream& out) {
  return print_sum(lr_product(Partition::parse(opt.lambda), Partition::parse(opt.mu)), opt.json, out);
}

int cmd_plethysm(const SchurOptions& opt, std::ostream& out) {
  if (opt.kind == "sym2") return print_sum(plethysm_sym2(opt.n), opt.json, out);
  if (opt.kind == "alt2") return print_sum(plethysm_transpose(plethysm_sym2(opt.n)), opt.json, out);
  throw ParseError("plethysm: expected sym2 or alt2, got \"" + opt.kind + "\"");
}

int cmd_ideal(const SchurOptions& opt, std::ostream& out) {
  return print_sum(ideal_structure(parse_ideal_kind(opt.ideal)), opt.json, out);
}

// ---- construct ------------------------------------------------------------

struct ConstructOptions {
  std::string what;
  std::string matrix;
  std::string matrix2;
  std::string l0 = "1";
  std::vector<std::string> lambdas{"1"};
  int p = 1;
  int q = 1;
  std::string out_path;
};

int cmd_construct(const ConstructOptions& opt, std::ostream& out) {
  DenseTensor t;
  auto need_matrix = [&](const std::string& text, const char* flag) {
    if (text.empty()) throw ParseError(std::string(flag) + " is required");
    return decode_matrix(json_argument(text, flag));
  };
  if (opt.what == "gamma") {
    t = gamma(need_matrix(opt.matrix, "--matrix"));
  } else if (opt.what == "alpha") {
    t = alpha(need_matrix(opt.matrix, "--matrix"));
  } else if (opt.what == "product") {
    t = tensor_product(need_matrix(opt.matrix, "--matrix"), need_matrix(opt.matrix2, "--matrix2"));
  } else if (opt.what == "clifford") {
    if (opt.lambdas.size() > 3) throw DomainError("clifford: at most three lambdas on R^4");
    std::vector<Rational> ls;
    for (const auto& s : opt.lambdas) ls.push_back(parse_rational(s));
    auto maps = quaternionic_triple();
    maps.resize(ls.size());
    t = clifford_family(parse_rational(opt.l0), ls, maps, Metric::euclidean(4));
  } else if (opt.what == "nilpotent-gamma") {
    t = gamma(nilpotent_sym_example(opt.p, opt.q));
  } else if (opt.what == "nilpotent-alpha") {
    t = alpha(nilpotent_skew_example(opt.p, opt.q));
  } else {
    throw ParseError("construct: unknown kind \"" + opt.what + "\"");
  }
  if (opt.out_path.empty()) {
    emit(out, encode(t));
  } else {
    write_file(opt.out_path, encode(t));
  }
  return kOk;
}

// ---- osserman -------------------------------------------------------------

struct OssermanOptions {
  std::string tensor_path;
  std::string metric;
  int p = -1;
  int q = -1;
  std::string sign = "+";
  int count = 10;
  int samples = 20;
  int trials = 50;
  std::string kind = "sym";
  std::string family = "clifford";
  std::string l0 = "2";
  std::vector<std::string> lambdas{"1"};
  std::uint64_t seed = kDefaultSeed;
  bool json = false;
};

Json spectrum_json(const SpectrumReport& r) { return encode(r); }

bool print_spectrum(const SpectrumReport& r, std::ostream& out, bool json) {
  if (json) {
    emit(out, spectrum_json(r));
    return r.constant;
  }
  int k = 0;
  for (const auto& s : r.samples) {
    out << "sample " << ++k << ": x = " << show(s.x) << "\n";
    out << "  char poly: " << s.char_poly.to_string("t") << "\n";
    out << "  rational roots: " << show_roots(s.roots) << (s.rational ? "" : " (plus irrational factor)")
        << "\n";
  }
  out << "spectrum: " << show_set(r.roots) << "\n";
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  out << "constant on " << r.samples.size() << " samples: " << verdict(r.constant) << "\n";
  return r.constant;
}

Metric resolve_metric(const OssermanOptions& opt, int dim) {
  if (!opt.metric.empty()) return decode_metric(json_argument(opt.metric, "--metric"));
  if (opt.p >= 0 || opt.q >= 0) return Metric::signature(std::max(opt.p, 0), std::max(opt.q, 0));
  return Metric::euclidean(dim);
}

int cmd_spectrum(const OssermanOptions& opt, std::ostream& out) {
  if (opt.tensor_path.empty()) throw ParseError("--tensor is required");
  const DenseTensor t = decode_tensor(read_json_file(opt.tensor_path));
  const Metric g = resolve_metric(opt, t.dim());
  const auto report = osserman_spectrum_sample(t, g, opt.count, parse_sign(opt.sign), opt.seed);
  return print_spectrum(report, out, opt.json) ? kOk : kVerificationFailed;
}

int report_nilpotent(const DenseTensor& t, const Metric& g, const OssermanOptions& opt,
                     std::ostream& out, Json* json) {
  const bool nil = nilpotency_check(t, g, opt.samples, opt.seed);
  const bool nonzero = !t.is_zero();
  if (json) {
    (*json)["tensor_nonzero"] = nonzero;
    (*json)["nilpotent"] = nil;
  } else {
    // In signature (1,q) or (p,1) the image of C is isotropic, so C has rank
    // one and gamma of a rank-one matrix vanishes.
    out << "T nonzero: " << (nonzero ? "yes" : "no (T = 0 identically)") << "\n";
    out << "J^2=0 on all samples: " << verdict(nil) << "\n";
  }
  return nil ? kOk : kVerificationFailed;
}

int cmd_nilpotent(const OssermanOptions& opt, std::ostream& out) {
  const int p = std::max(opt.p, 0), q = std::max(opt.q, 0);
  const bool sym = opt.kind == "sym";
  if (!sym && opt.kind != "skew") throw ParseError("--kind: expected sym or skew");
  const Matrix m = sym ? nilpotent_sym_example(p, q) : nilpotent_skew_example(p, q);
  const Metric g = Metric::signature(p, q);
  const Matrix mf = m * g.matrix();
  const bool square_zero = (mf * mf).is_zero();
  const DenseTensor t = sym ? gamma(m) : alpha(m);
  Json j;
  if (opt.json) {
    j = Json{{"kind", opt.kind}, {"p", p}, {"q", q}, {"matrix", encode(m)}, {"square_zero", square_zero}};
  } else {
    out << (sym ? "S" : "A") << " for signature (" << p << "," << q << "):\n";
    print_matrix(out, m);
    out << "(" << (sym ? "S" : "A") << "F)^2 = 0: " << verdict(square_zero) << "\n";
  }
  int code = report_nilpotent(t, g, opt, out, opt.json ? &j : nullptr);
  if (opt.json) emit(out, j);
  return square_zero ? code : kVerificationFailed;
}

int cmd_lorentz(const OssermanOptions& opt, std::ostream& out) {
  const int q = opt.q < 0 ? 1 : opt.q;
  const LorentzReport r = lorentz_checks(q, opt.trials, opt.seed);
  if (opt.json) {
    emit(out, Json{{"q", r.q},
                   {"trials", r.trials},
                   {"skew_nonvanishing", r.skew_nonvanishing},
                   {"jacobi_samples", r.jacobi_samples},
                   {"jacobi_vanishes", r.jacobi_vanishes},
                   {"ok", r.ok()}});
  } else {
    out << "signature (1," << r.q << ")\n";
    out << "random nonzero skew A with (AF)^2 != 0: " << r.skew_nonvanishing << "/" << r.trials << " "
        << verdict(r.skew_nonvanishing == r.trials) << "\n";
    out << "J_gamma(S)(x) = 0 on " << r.jacobi_samples << " samples: " << verdict(r.jacobi_vanishes)
        << "\n";
  }
  return r.ok() ? kOk : kVerificationFailed;
}

int cmd_demo(const OssermanOptions& opt, std::ostream& out) {
  if (opt.family == "clifford") {
    std::vector<Rational> ls;
    for (const auto& s : opt.lambdas) ls.push_back(parse_rational(s));
    if (ls.size() > 3) throw DomainError("clifford demo: at most three lambdas on R^4");
    auto maps = quaternionic_triple();
    maps.resize(ls.size());
    const Metric g = Metric::euclidean(4);
    const DenseTensor t = clifford_family(parse_rational(opt.l0), ls, maps, g);
    if (!opt.json) out << "Clifford family on R^4, lambda0 = " << opt.l0 << "\n";
    const auto report = osserman_spectrum_sample(t, g, opt.count, 1, opt.seed);
    return print_spectrum(report, out, opt.json) ? kOk : kVerificationFailed;
  }
  OssermanOptions o = opt;
  if (opt.family == "nilpotent-gamma") {
    o.kind = "sym";
    if (o.p < 0) o.p = 1;
    if (o.q < 0) o.q = 1;
  } else if (opt.family == "nilpotent-alpha") {
    o.kind = "skew";
    if (o.p < 0) o.p = 2;
    if (o.q < 0) o.q = 2;
  } else {
    throw ParseError("--family: expected clifford, nilpotent-gamma or nilpotent-alpha");
  }
  return cmd_nilpotent(o, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact group-ring and curvature-tensor computations", "acurv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  IdentitiesOptions idopt;
  auto* identities = app.add_subcommand("identities", "Verify the group-ring identity table and idempotents");
  identities->add_flag("--json", idopt.json, "Machine-readable output");
  identities->add_flag("--inject-fault", idopt.inject_fault)->group("");

  CheckOptions chopt;
  auto* check = app.add_subcommand("check-curvature", "Test a tensor for the curvature symmetries");
  check->add_option("path", chopt.path, "Tensor JSON file")->required();
  check->add_flag("--json", chopt.json, "Machine-readable output");

  DecomposeOptions deopt;
  auto* decompose = app.add_subcommand("decompose", "Write a curvature tensor as gammas and alphas");
  decompose->add_option("path", deopt.path, "Tensor JSON file")->required();
  decompose->add_option("--mode", deopt.mode, "mixed, gamma or alpha")
      ->check(CLI::IsMember({"mixed", "gamma", "alpha"}));
  decompose->add_option("--out", deopt.out_path, "Write the decomposition JSON here");
  decompose->add_flag("--epsilon-form", deopt.epsilon_form, "Also print sqrt(weight)-folded terms");

  SchurOptions scopt;
  auto* schur = app.add_subcommand("schur", "Littlewood-Richardson products and plethysms");
  schur->require_subcommand(1);
  auto add_lr = [&](CLI::App* sub) {
    sub->add_option("lambda", scopt.lambda, "Partition, e.g. 2 or 2,1")->required();
    sub->add_option("mu", scopt.mu, "Partition")->required();
    sub->add_flag("--json", scopt.json);
  };
  auto add_pl = [&](CLI::App* sub) {
    sub->add_option("kind", scopt.kind, "sym2 or alt2")->required();
    sub->add_option("n", scopt.n, "Inner degree")->required();
    sub->add_flag("--json", scopt.json);
  };
  auto* schur_lr = schur->add_subcommand("lr", "Product [lambda][mu]");
  add_lr(schur_lr);
  auto* schur_pl = schur->add_subcommand("plethysm", "[2] or [1,1] plethysm with [n]");
  add_pl(schur_pl);
  auto* schur_ideal = schur->add_subcommand("ideal", "Structure of the SS, SA, AS or AA ideal");
  schur_ideal->add_option("kind", scopt.ideal, "SS, SA, AS or AA")->required();
  schur_ideal->add_flag("--json", scopt.json);
  auto* lr = app.add_subcommand("lr", "Same as `schur lr`");
  add_lr(lr);
  auto* plethysm = app.add_subcommand("plethysm", "Same as `schur plethysm`");
  add_pl(plethysm);

  ConstructOptions coopt;
  auto* construct = app.add_subcommand("construct", "Emit tensor JSON for built-in constructions");
  construct->add_option("kind", coopt.what,
                        "gamma, alpha, product, clifford, nilpotent-gamma or nilpotent-alpha")
      ->required();
  construct->add_option("--matrix", coopt.matrix, "Matrix JSON literal or @file");
  construct->add_option("--matrix2", coopt.matrix2, "Second factor for `product`");
  construct->add_option("--l0", coopt.l0, "Clifford lambda0");
  construct->add_option("--lambdas", coopt.lambdas, "Clifford lambda_i")->delimiter(',');
  construct->add_option("--p", coopt.p);
  construct->add_option("--q", coopt.q);
  construct->add_option("--out", coopt.out_path, "Output file");

  OssermanOptions osopt;
  auto* osserman = app.add_subcommand("osserman", "Jacobi operator spectra and nilpotent examples");
  osserman->require_subcommand(1);
  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", osopt.seed, "Sampling seed");
    sub->add_flag("--json", osopt.json);
  };
  auto* spectrum = osserman->add_subcommand("spectrum", "Sample the Jacobi spectrum on a pseudo-sphere");
  spectrum->add_option("--tensor", osopt.tensor_path, "Tensor JSON file")->required();
  spectrum->add_option("--metric", osopt.metric, "Metric JSON literal or @file");
  spectrum->add_option("--p", osopt.p);
  spectrum->add_option("--q", osopt.q);
  spectrum->add_option("--sign", osopt.sign, "+ or -");
  spectrum->add_option("--count", osopt.count, "Number of sample points");
  common(spectrum);
  auto* nilpotent = osserman->add_subcommand("nilpotent", "Build and check a nilpotent example");
  nilpotent->add_option("--p", osopt.p)->required();
  nilpotent->add_option("--q", osopt.q)->required();
  nilpotent->add_option("--kind", osopt.kind, "sym or skew");
  nilpotent->add_option("--samples", osopt.samples);
  common(nilpotent);
  auto* lorentz = osserman->add_subcommand("lorentz", "Rigidity checks in signature (1,q)");
  lorentz->add_option("--q", osopt.q)->required();
  lorentz->add_option("--trials", osopt.trials);
  common(lorentz);
  auto* demo = osserman->add_subcommand("demo", "Built-in examples");
  demo->add_option("--family", osopt.family, "clifford, nilpotent-gamma or nilpotent-alpha");
  demo->add_option("--l0", osopt.l0);
  demo->add_option("--l1", osopt.lambdas, "lambda_1 (repeat or comma-separate for more)")
      ->delimiter(',');
  demo->add_option("--p", osopt.p);
  demo->add_option("--q", osopt.q);
  demo->add_option("--count", osopt.count);
  demo->add_option("--samples", osopt.samples);
  common(demo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (identities->parsed()) return cmd_identities(idopt, out);
    if (check->parsed()) return cmd_check_curvature(chopt, out);
    if (decompose->parsed()) return cmd_decompose(deopt, out);
    if (schur_lr->parsed() || lr->parsed()) return cmd_lr(scopt, out);
    if (schur_pl->parsed() || plethysm->parsed()) return cmd_plethysm(scopt, out);
    if (schur_ideal->parsed()) return cmd_ideal(scopt, out);
    if (construct->parsed()) return cmd_construct(coopt, out);
    if (spectrum->parsed()) return cmd_spectrum(osopt, out);
    if (nilpotent->parsed()) return cmd_nilpotent(osopt, out);
    if (lorentz->parsed()) return cmd_lorentz(osopt, out);
    if (demo->parsed()) return cmd_demo(osopt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const SignatureError& e) {
    err << "signature error: " << e.what() << "\n";
    return kSignature;
  } catch (const Error& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kVerificationFailed;
  }
  err << app.help();
  return kParseError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace acurv::cli
