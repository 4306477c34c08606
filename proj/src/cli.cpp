#include "medial/cli.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "medial/analysis.hpp"
#include "medial/errors.hpp"
#include "medial/expression.hpp"

namespace medial::cli {

using nlohmann::ordered_json;

namespace {

std::string join_alpha(const MultiIndex& alpha) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha[i]);
  }
  return s;
}

ordered_json witness_json(const SquareMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string label_text(const ClassLabel& label) {
  struct Visitor {
    std::string operator()(const Univariate& u) const {
      return "univariate in x" + std::to_string(u.index + 1) + ": " + format(u.body);
    }
    std::string operator()(const Affine& a) const {
      std::string s = "affine a =";
      for (const auto& c : a.coefficients) s += " " + c.to_string();
      return s;
    }
    std::string operator()(const ShiftedMonomial& s) const {
      return "shifted_monomial a = " + s.a.to_string() + ", b = " + s.b.to_string() +
             ", alpha = (" + join_alpha(s.alpha) + ")";
    }
  };
  return std::visit(Visitor{}, label);
}

void print_text(std::ostream& out, const ordered_json& report, const Verdict& verdict) {
  out << "verdict: " << report["verdict"].get<std::string>() << '\n';
  if (const auto* b = std::get_if<Bisymmetric>(&verdict)) {
    out << "class: " << label_text(b->label) << '\n';
  } else {
    const auto& nb = std::get<NotBisymmetric>(verdict);
    out << "witness: " << report["witness"].dump() << '\n';
    out << "lhs: " << nb.lhs << "\nrhs: " << nb.rhs << '\n';
  }
  out << "method: " << report["method"].get<std::string>() << '\n';
  if (!report["seed"].is_null()) out << "seed: " << report["seed"].get<std::uint64_t>() << '\n';
  out << "elapsed_ms: " << report["elapsed_ms"].get<double>() << '\n';
}

struct Options {
  std::size_t arity = 0;
  std::string method = "classify";
  std::uint64_t trials = RandomizedConfig{}.trials;
  std::uint64_t bound = RandomizedConfig{}.bound;
  std::uint64_t seed = RandomizedConfig{}.seed;
  std::string ring = "Q";
  std::size_t term_ceiling = SymbolicConfig{}.term_ceiling;
  std::string output = "structured";
  bool no_timing = false;
  std::string expression;
  // construct
  std::string a;
  std::string b;
  std::string alpha;
  // identify (1-based)
  std::size_t i = 0;
  std::size_t j = 0;
};

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}

  double elapsed_ms() const {
    if (!enabled_) return 0.0;
    const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start_;
    return std::round(d.count() * 1000.0) / 1000.0;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

MultiIndex parse_alpha(const std::string& text) {
  std::vector<MultiIndex::value_type> exps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos ||
        item.size() > 4) {
      throw std::invalid_argument("malformed --alpha entry '" + item + "'");
    }
    exps.push_back(static_cast<MultiIndex::value_type>(std::stoul(item)));
  }
  if (exps.empty()) throw std::invalid_argument("--alpha must list at least one exponent");
  return MultiIndex(std::move(exps));
}

void emit(std::ostream& out, const Options& opt, const ordered_json& doc) {
  if (opt.output == "structured") {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

int run_check(const Options& opt, std::ostream& out, std::ostream& err) {
  const Polynomial p = parse(opt.expression, opt.arity);
  const RandomizedConfig rcfg{opt.trials, opt.bound, opt.seed};
  const SymbolicConfig scfg{opt.term_ceiling};
  const EscalationConfig ecfg{rcfg, scfg};
  Stopwatch clock(!opt.no_timing);

  const bool seeded = opt.method == "randomized" || opt.method == "all";
  const std::optional<std::uint64_t> seed =
      seeded ? std::optional<std::uint64_t>(opt.seed) : std::nullopt;
  int code = kVerdict;
  const Verdict verdict = [&]() -> Verdict {
    if (opt.method == "symbolic") return check_symbolic(p, scfg);
    if (opt.method == "randomized") return check_randomized(p, rcfg);
    Verdict fast = classify(p, ecfg);
    if (opt.method == "classify") return fast;

    std::vector<std::pair<std::string, Verdict>> results;
    results.emplace_back("classify", fast);
    try {
      results.emplace_back("symbolic", check_symbolic(p, scfg));
    } catch (const ResourceExceeded& e) {
      err << "note: symbolic oracle skipped (" << e.what() << ")\n";
    }
    results.emplace_back("randomized", check_randomized(p, rcfg));
    for (const auto& [name, v] : results) {
      if (is_bisymmetric(v) != is_bisymmetric(fast)) {
        err << "error: " << name << " disagrees with classify\n";
        code = kDisagreement;
      }
      if (const auto* nb = std::get_if<NotBisymmetric>(&v); nb && !verify_witness(p, *nb)) {
        err << "error: " << name << " witness does not verify\n";
        code = kDisagreement;
      }
    }
    return fast;
  }();

  if (const auto* b = std::get_if<Bisymmetric>(&verdict)) {
    if (const auto* s = std::get_if<ShiftedMonomial>(&b->label); s && opt.ring == "Z" &&
                                                                  !s->b.is_integer()) {
      err << "warning: b = " << s->b << " is not an integer; over Z this polynomial is the "
          << "restriction of a class (iii) polynomial with rational shift\n";
    }
  }

  const auto report = verdict_report(verdict, opt.method, seed, clock.elapsed_ms());
  if (opt.output == "structured") {
    out << report.dump(2) << '\n';
  } else {
    print_text(out, report, verdict);
  }
  return code;
}

int run_construct(const Options& opt, std::ostream& out) {
  Stopwatch clock(!opt.no_timing);
  const ClassIIISpec spec{Rational::parse(opt.a), Rational::parse(opt.b), parse_alpha(opt.alpha)};
  const Polynomial p = construct_class_iii(spec);
  ordered_json doc;
  doc["polynomial"] = format(p);
  doc["arity"] = p.arity();
  doc["a"] = spec.a.to_string();
  doc["b"] = spec.b.to_string();
  doc["alpha"] = spec.alpha.exponents();
  doc["ring"] = opt.ring;
  if (opt.ring == "Z") {
    if (spec.a.is_integer()) {
      ordered_json conditions = ordered_json::array();
      for (const auto& c : integrality_conditions(spec)) conditions.push_back(c.to_string());
      doc["integrality"] = integrality_check(spec);
      doc["conditions"] = std::move(conditions);
    } else {
      doc["integrality"] = false;
      doc["conditions"] = nullptr;
    }
  } else {
    doc["integrality"] = nullptr;
    doc["conditions"] = nullptr;
  }
  doc["elapsed_ms"] = clock.elapsed_ms();
  emit(out, opt, doc);
  return kVerdict;
}

int run_components(const Options& opt, std::ostream& out) {
  Stopwatch clock(!opt.no_timing);
  const Polynomial p = parse(opt.expression, opt.arity);
  const auto parts = decompose(p);
  ordered_json components = ordered_json::array();
  for (auto it = parts.components.rbegin(); it != parts.components.rend(); ++it) {
    components.push_back(ordered_json{{"degree", it->first}, {"polynomial", format(it->second)}});
  }
  ordered_json doc;
  doc["polynomial"] = format(p);
  doc["components"] = std::move(components);
  doc["elapsed_ms"] = clock.elapsed_ms();
  emit(out, opt, doc);
  return kVerdict;
}

int run_conjugate(const Options& opt, std::ostream& out) {
  Stopwatch clock(!opt.no_timing);
  const Polynomial p = parse(opt.expression, opt.arity);
  const Rational b = Rational::parse(opt.b);
  ordered_json doc;
  doc["polynomial"] = format(p);
  doc["b"] = b.to_string();
  doc["result"] = format(conjugate_translate(p, b));
  doc["elapsed_ms"] = clock.elapsed_ms();
  emit(out, opt, doc);
  return kVerdict;
}

int run_identify(const Options& opt, std::ostream& out) {
  Stopwatch clock(!opt.no_timing);
  const Polynomial p = parse(opt.expression, opt.arity);
  if (opt.i == 0 || opt.j == 0) throw std::invalid_argument("--i and --j are 1-based");
  const Polynomial q = identify(p, opt.i - 1, opt.j - 1);
  ordered_json doc;
  doc["polynomial"] = format(p);
  doc["i"] = opt.i;
  doc["j"] = opt.j;
  doc["arity"] = q.arity();
  doc["result"] = format(q);
  doc["elapsed_ms"] = clock.elapsed_ms();
  emit(out, opt, doc);
  return kVerdict;
}

}  // namespace

ordered_json label_json(const ClassLabel& label) {
  struct Visitor {
    ordered_json operator()(const Univariate& u) const {
      ordered_json j;
      j["kind"] = "univariate";
      j["index"] = u.index + 1;
      j["body"] = format(u.body);
      return j;
    }
    ordered_json operator()(const Affine& a) const {
      ordered_json j;
      j["kind"] = "affine";
      ordered_json coeffs = ordered_json::array();
      for (const auto& c : a.coefficients) coeffs.push_back(c.to_string());
      j["coefficients"] = std::move(coeffs);
      return j;
    }
    ordered_json operator()(const ShiftedMonomial& s) const {
      ordered_json j;
      j["kind"] = "shifted_monomial";
      j["a"] = s.a.to_string();
      j["b"] = s.b.to_string();
      j["alpha"] = s.alpha.exponents();
      return j;
    }
  };
  return std::visit(Visitor{}, label);
}

ordered_json verdict_report(const Verdict& verdict, const std::string& method,
                            std::optional<std::uint64_t> seed, double elapsed_ms) {
  ordered_json report;
  if (const auto* b = std::get_if<Bisymmetric>(&verdict)) {
    report["verdict"] = "bisymmetric";
    report["class"] = label_json(b->label);
    report["witness"] = nullptr;
  } else {
    report["verdict"] = "not_bisymmetric";
    report["class"] = nullptr;
    report["witness"] = witness_json(std::get<NotBisymmetric>(verdict).witness);
  }
  report["method"] = method;
  report["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  report["elapsed_ms"] = elapsed_ms;
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bisymmetry checker for polynomial functions over Z and Q", "medial"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&opt](CLI::App* cmd) {
    cmd->add_option("--output", opt.output, "Report format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_flag("--no-timing", opt.no_timing, "Report elapsed_ms as 0 (byte-stable output)");
  };
  const auto add_expression = [&opt](CLI::App* cmd) {
    cmd->add_option("--arity", opt.arity, "Number of variables")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    cmd->add_option("expression", opt.expression, "Polynomial, e.g. \"x1*x2 + 1/3\"")->required();
  };
  const auto add_check_flags = [&opt](CLI::App* cmd) {
    cmd->add_option("--trials", opt.trials, "Randomized trials")->check(CLI::PositiveNumber);
    cmd->add_option("--bound", opt.bound, "Samples are drawn from [-bound, bound]")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 62));
    cmd->add_option("--seed", opt.seed, "Seed of the randomized checker");
    cmd->add_option("--ring", opt.ring, "Declared coefficient ring")
        ->check(CLI::IsMember({"Z", "Q"}));
    cmd->add_option("--term-ceiling", opt.term_ceiling, "Symbolic composition term ceiling")
        ->check(CLI::PositiveNumber);
  };

  auto* check = app.add_subcommand("check", "Decide bisymmetry");
  add_expression(check);
  add_check_flags(check);
  add_common(check);
  check->add_option("--method", opt.method, "classify | symbolic | randomized | all")
      ->check(CLI::IsMember({"classify", "symbolic", "randomized", "all"}));

  auto* classify_cmd = app.add_subcommand("classify", "Alias for check --method classify");
  add_expression(classify_cmd);
  add_check_flags(classify_cmd);
  add_common(classify_cmd);

  auto* construct = app.add_subcommand("construct", "Expand a*prod(x_i + b)^alpha_i - b");
  construct->add_option("--a", opt.a, "Nonzero rational a")->required();
  construct->add_option("--b", opt.b, "Rational b")->required();
  construct->add_option("--alpha", opt.alpha, "Comma-separated exponents")->required();
  construct->add_option("--ring", opt.ring, "Z reports integrality conditions")
      ->check(CLI::IsMember({"Z", "Q"}));
  add_common(construct);

  auto* components = app.add_subcommand("components", "Homogeneous components");
  add_expression(components);
  add_common(components);

  auto* conjugate = app.add_subcommand("conjugate", "x -> P(x + b*1) - b");
  add_expression(conjugate);
  conjugate->add_option("--b", opt.b, "Translation")->required();
  add_common(conjugate);

  auto* identify_cmd = app.add_subcommand("identify", "Identify variables x_j := x_i (i < j)");
  add_expression(identify_cmd);
  identify_cmd->add_option("--i", opt.i, "1-based index i")->required();
  identify_cmd->add_option("--j", opt.j, "1-based index j")->required();
  add_common(identify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerdict;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (check->parsed()) return run_check(opt, out, err);
    if (classify_cmd->parsed()) {
      opt.method = "classify";
      return run_check(opt, out, err);
    }
    if (construct->parsed()) return run_construct(opt, out);
    if (components->parsed()) return run_components(opt, out);
    if (conjugate->parsed()) return run_conjugate(opt, out);
    if (identify_cmd->parsed()) return run_identify(opt, out);
  } catch (const ResourceExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceExceeded;
  } catch (const InconsistentVerdict& e) {
    err << "error: " << e.what() << '\n';
    return kDisagreement;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace medial::cli
