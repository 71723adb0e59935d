// ncg: command-line frontend for the ncgateaux C API.
//
//   ncg eval   --at X EXPR
//   ncg diff   --order M --at X --dirs H1,...,HM [--verify] EXPR
//   ncg taylor --order N --center X0 --probe H EXPR
//   ncg check  --suite monomial|leibniz|chain|taylor --seed S
//   ncg norm   --map "A1,B1;A2,B2" --samples N --seed S
//
// Common: --algebra quat|complex|matrix:N, --format text|structured.
// EXPR is read from standard input when omitted or "-".
// Exit codes: 0 success, 1 usage or parse error, 2 numeric failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "handles.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace ncg_cli;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr std::size_t kMaxVerifyOrder = 4;

struct Options {
  std::string algebra = "quat";
  std::string format = "text";
  std::uint64_t seed = 0;
  std::string expression;
  std::string at = "0";
  std::size_t order = 1;
  std::string dirs;
  bool verify = false;
  double tolerance = 1e-8;
  std::string center = "0";
  std::string probe;
  std::size_t probe_levels = 8;
  std::string suite;
  std::string map;
  std::size_t samples = 10000;
};

// Splits on `sep` outside of (), [] nesting, so matrix literals survive.
std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  return out;
}

class Session {
 public:
  explicit Session(const Options& opt)
      : opt_(opt), algebra_(make<Algebra>(ncg_algebra_create, opt.algebra.c_str())) {
    dim_ = ncg_algebra_dimension(algebra_.get());
    char* name = nullptr;
    check(ncg_algebra_name(algebra_.get(), &name));
    name_ = take_string(name);
  }

  const std::string& algebra_name() const { return name_; }

  Element element(const std::string& text) const {
    return make<Element>(ncg_element_parse, algebra_.get(), text.c_str());
  }

  Poly poly(const std::string& text) const {
    return make<Poly>(ncg_poly_parse, algebra_.get(), text.c_str());
  }

  json value(const ncg_element* e) const {
    return json{{"coords", coords(e, dim_)}, {"pretty", format(e)}};
  }

  json eval(json& input, json& diagnostics) const {
    const Poly p = poly(opt_.expression);
    const Element x = element(opt_.at);
    input["at"] = coords(x.get(), dim_);
    const Element y = make<Element>(ncg_poly_eval, p.get(), x.get());
    diagnostics["degree"] = ncg_poly_degree(p.get());
    diagnostics["terms"] = ncg_poly_term_count(p.get());
    return value(y.get());
  }

  json diff(json& input, json& diagnostics, json& verification, bool& ok) const {
    const Poly p = poly(opt_.expression);
    const Element x = element(opt_.at);
    std::vector<std::string> texts = split_top_level(opt_.dirs, ',');
    if (opt_.order == 0) texts.clear();
    else if (texts.size() == 1) texts.assign(opt_.order, texts.front());
    std::vector<Element> dirs;
    for (const auto& d : texts) dirs.push_back(element(d));
    if (dirs.size() != opt_.order)
      throw ApiFailure(NCG_ERR_ARITY, "--dirs needs " + std::to_string(opt_.order) + " directions", -1);

    input["order"] = opt_.order;
    input["at"] = coords(x.get(), dim_);
    json jd = json::array();
    std::vector<const ncg_element*> raw;
    for (const auto& d : dirs) {
      jd.push_back(coords(d.get(), dim_));
      raw.push_back(d.get());
    }
    input["dirs"] = jd;

    const Form form = make<Form>(ncg_poly_derivative, p.get(), opt_.order);
    const Element result = make<Element>(ncg_form_apply, form.get(), x.get(), raw.data(), raw.size());
    char* text = nullptr;
    check(ncg_form_format(form.get(), &text));
    diagnostics["form_terms"] = ncg_form_term_count(form.get());
    diagnostics["form"] = take_string(text);

    if (opt_.verify) {
      if (opt_.order < 1 || opt_.order > kMaxVerifyOrder)
        throw ApiFailure(NCG_ERR_INVALID_ARGUMENT,
                         "--verify supports orders 1.." + std::to_string(kMaxVerifyOrder), -1);
      const Element fd = nested_fd(p.get(), x.get(), raw);
      const Element diff = make<Element>(ncg_element_sub, fd.get(), result.get());
      double err = 0.0, scale = 0.0;
      check(ncg_element_norm(diff.get(), &err));
      check(ncg_element_norm(result.get(), &scale));
      const double tol = opt_.tolerance * (1.0 + scale);
      ok = err <= tol;
      verification = json{{"fd_coords", coords(fd.get(), dim_)},
                          {"fd_t0", verify_schedule(opt_.order).t0},
                          {"abs_error", err},
                          {"tolerance", tol},
                          {"passed", ok}};
    }
    return value(result.get());
  }

  json taylor(json& input, json& diagnostics) const {
    const Poly p = poly(opt_.expression);
    const Element center = element(opt_.center);
    const Element h = element(opt_.probe);
    input["order"] = opt_.order;
    input["center"] = coords(center.get(), dim_);
    input["probe"] = coords(h.get(), dim_);

    const Taylor e = make<Taylor>(ncg_taylor_expand, p.get(), center.get(), opt_.order);
    const Element y = make<Element>(ncg_element_add, center.get(), h.get());
    json terms = json::array();
    for (std::size_t k = 0; k <= opt_.order; ++k) {
      const Element t = make<Element>(ncg_taylor_term, e.get(), k, y.get());
      json entry = value(t.get());
      terms.push_back(json{{"order", k}, {"coords", entry["coords"]}, {"pretty", entry["pretty"]}});
    }
    const Element approx = make<Element>(ncg_taylor_eval, e.get(), y.get());
    const Element exact = make<Element>(ncg_poly_eval, p.get(), y.get());

    std::vector<double> ts;
    for (std::size_t k = 1; k <= opt_.probe_levels; ++k) ts.push_back(std::ldexp(1.0, -static_cast<int>(k)));
    std::vector<double> ratios(ts.size());
    check(ncg_taylor_remainder_probe(p.get(), e.get(), h.get(), ts.data(), ts.size(), ratios.data()));
    json table = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) table.push_back(json{{"t", ts[i]}, {"ratio", ratios[i]}});

    json result = value(approx.get());
    result["terms"] = terms;
    diagnostics["exact"] = value(exact.get());
    diagnostics["remainder"] = table;
    return result;
  }

  json check_suite(json& input, bool& ok) const {
    input["suite"] = opt_.suite;
    input["seed"] = opt_.seed;
    const CheckReport report = make<CheckReport>(ncg_check_run, algebra_.get(), opt_.suite.c_str(), opt_.seed);
    json theorems = json::array();
    ok = true;
    for (std::size_t i = 0; i < ncg_check_report_count(report.get()); ++i) {
      const bool passed = ncg_check_report_passed(report.get(), i) != 0;
      ok = ok && passed;
      theorems.push_back(json{{"name", ncg_check_report_name(report.get(), i)},
                              {"passed", passed},
                              {"max_error", ncg_check_report_max_error(report.get(), i)},
                              {"tolerance", ncg_check_report_tolerance(report.get(), i)},
                              {"cases", ncg_check_report_cases(report.get(), i)}});
    }
    return json{{"passed", ok}, {"pretty", ok ? "all theorems pass" : "some theorems fail"},
                {"theorems", theorems}};
  }

  json norm(json& input) const {
    const LinMap map = make<LinMap>(ncg_linmap_create, algebra_.get());
    json terms = json::array();
    for (const auto& term : split_top_level(opt_.map, ';')) {
      const auto parts = split_top_level(term, ',');
      if (parts.size() != 2)
        throw ApiFailure(NCG_ERR_INVALID_ARGUMENT, "--map terms must be 'left,right', got '" + term + "'", -1);
      const Element left = element(parts[0]);
      const Element right = element(parts[1]);
      check(ncg_linmap_add_term(map.get(), left.get(), right.get()));
      terms.push_back(json{{"left", coords(left.get(), dim_)}, {"right", coords(right.get(), dim_)}});
    }
    input["map"] = terms;
    input["samples"] = opt_.samples;
    input["seed"] = opt_.seed;
    double sampled = 0.0, upper = 0.0;
    check(ncg_linmap_norm_estimate(map.get(), opt_.samples, opt_.seed, &sampled, &upper));
    return json{{"sampled", sampled},
                {"upper_bound", upper},
                {"pretty", "sampled " + json(sampled).dump() + ", upper bound " + json(upper).dump()}};
  }

 private:
  struct FdLevel {
    const Session* session;
    const ncg_poly* poly;
    const ncg_element* dir;   // null at level 0: plain evaluation
    const FdLevel* inner;
    ncg_fd_schedule schedule;
  };

  // g₀ = p, g_k(y) = D_{h_k} g_{k−1}(y), all through the black-box callback.
  static int level_map(const double* in, double* out, std::size_t dim, void* user) {
    const auto* level = static_cast<const FdLevel*>(user);
    ncg_element* y = nullptr;
    if (ncg_element_from_coords(level->session->algebra_.get(), in, dim, &y) != NCG_OK) return 1;
    const Element yh(y);
    ncg_element* r = nullptr;
    ncg_status s;
    if (level->dir == nullptr) {
      s = ncg_poly_eval(level->poly, y, &r);
    } else {
      s = ncg_fd_directional(level->session->algebra_.get(), level_map, const_cast<FdLevel*>(level->inner),
                             y, level->dir, &level->schedule, &r);
    }
    if (s != NCG_OK) return 1;
    const Element rh(r);
    return ncg_element_coords(r, out, dim) == NCG_OK ? 0 : 1;
  }

  // Central differences with three Richardson levels; the base step grows
  // with the nesting depth.
  static ncg_fd_schedule verify_schedule(std::size_t order) {
    ncg_fd_schedule s = ncg_fd_default_schedule();
    if (order > 2) s.t0 = 0.2;
    return s;
  }

  Element nested_fd(const ncg_poly* p, const ncg_element* x, const std::vector<const ncg_element*>& dirs) const {
    const ncg_fd_schedule sched = verify_schedule(dirs.size());
    std::vector<FdLevel> levels;
    levels.reserve(dirs.size() + 1);
    levels.push_back({this, p, nullptr, nullptr, sched});
    for (const auto* d : dirs) levels.push_back({this, p, d, &levels.back(), sched});
    const FdLevel& top = levels.back();
    return make<Element>(ncg_fd_directional, algebra_.get(), level_map,
                         const_cast<FdLevel*>(top.inner), x, top.dir, &sched);
  }

  const Options& opt_;
  Algebra algebra_;
  std::size_t dim_ = 0;
  std::string name_;
};

void print_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (j.is_array()) {
    out << prefix << ":";
    for (const auto& v : j) out << ' ' << v.dump();
    out << '\n';
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const json& report, const Options& opt) {
  if (opt.format == "structured") std::cout << report.dump(2) << '\n';
  else print_text(report, "", std::cout);
}

int exit_code_for(ncg_status s) {
  switch (s) {
    case NCG_ERR_NUMERIC_OVERFLOW:
    case NCG_ERR_DOMAIN:
    case NCG_ERR_INTERNAL:
      return kExitNumeric;
    default:
      return kExitUsage;
  }
}

int report_error(const Options& opt, const std::string& command, const std::string& code,
                 const std::string& message, long position, int exit_code) {
  if (opt.format == "structured") {
    json err{{"code", code}, {"message", message}};
    if (position >= 0) err["position"] = position;
    std::cout << json{{"schema", 1}, {"command", command}, {"error", err}}.dump(2) << '\n';
  } else {
    std::cerr << "ncg: " << message << '\n';
  }
  return exit_code;
}

bool wants_structured(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--format=structured") return true;
    if (a == "--format" && i + 1 < argc && std::string(argv[i + 1]) == "structured") return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Gateaux derivatives of noncommutative polynomials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ncg_version()));

  auto common = [&](CLI::App* sub) {
    sub->add_option("--algebra", opt.algebra, "quat, complex or matrix:N")->capture_default_str();
    sub->add_option("--format", opt.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
  };
  auto expression = [&](CLI::App* sub) {
    sub->add_option("expression", opt.expression, "polynomial in x; '-' or omitted reads stdin");
  };

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial");
  common(eval);
  expression(eval);
  eval->add_option("--at", opt.at, "point x")->required();

  auto* diff = app.add_subcommand("diff", "apply the order-m derivative");
  common(diff);
  expression(diff);
  diff->add_option("--order", opt.order, "derivative order")->capture_default_str();
  diff->add_option("--at", opt.at, "point x")->capture_default_str();
  diff->add_option("--dirs", opt.dirs, "increments h1,...,hm (one value is repeated)")->required();
  diff->add_flag("--verify", opt.verify, "cross-check against nested finite differences");
  diff->add_option("--tol", opt.tolerance, "relative tolerance of --verify")->capture_default_str();

  auto* taylor = app.add_subcommand("taylor", "Taylor expansion and remainder probe");
  common(taylor);
  expression(taylor);
  taylor->add_option("--order", opt.order, "expansion order")->capture_default_str();
  taylor->add_option("--center", opt.center, "expansion center")->capture_default_str();
  taylor->add_option("--probe", opt.probe, "increment h; terms are evaluated at center+h")->required();
  taylor->add_option("--probe-levels", opt.probe_levels, "remainder probe at t = 2^-1..2^-L")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "randomised verification of derivative identities");
  common(check_cmd);
  check_cmd->add_option("--suite", opt.suite, "monomial, leibniz, chain or taylor")->required();

  auto* norm = app.add_subcommand("norm", "norm of a linear map x -> sum a*x*b");
  common(norm);
  norm->add_option("--map", opt.map, "terms 'a,b;c,d;...'")->required();
  norm->add_option("--samples", opt.samples, "unit-sphere samples")->check(CLI::PositiveNumber)->capture_default_str();

  std::string command;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    opt.format = wants_structured(argc, argv) ? "structured" : "text";
    return report_error(opt, "", "usage", e.what(), -1, kExitUsage);
  }
  command = app.get_subcommands().front()->get_name();

  try {
    if ((command == "eval" || command == "diff" || command == "taylor") &&
        (opt.expression.empty() || opt.expression == "-")) {
      opt.expression.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
      while (!opt.expression.empty() && (opt.expression.back() == '\n' || opt.expression.back() == '\r'))
        opt.expression.pop_back();
    }

    Session session(opt);
    json input = json::object();
    if (command == "eval" || command == "diff" || command == "taylor") input["expression"] = opt.expression;
    json diagnostics = json::object();
    json verification;
    json result;
    bool ok = true;

    if (command == "eval") result = session.eval(input, diagnostics);
    else if (command == "diff") result = session.diff(input, diagnostics, verification, ok);
    else if (command == "taylor") result = session.taylor(input, diagnostics);
    else if (command == "check") result = session.check_suite(input, ok);
    else result = session.norm(input);

    json report{{"schema", 1}, {"command", command}, {"algebra", session.algebra_name()},
                {"input", input}, {"result", result}};
    if (!verification.is_null()) report["verification"] = verification;
    report["diagnostics"] = diagnostics;
    emit(report, opt);
    return ok ? kExitOk : kExitNumeric;
  } catch (const ApiFailure& e) {
    return report_error(opt, command, ncg_status_name(e.status()), e.what(), e.position(),
                        exit_code_for(e.status()));
  } catch (const std::exception& e) {
    return report_error(opt, command, "internal", e.what(), -1, kExitNumeric);
  }
}
