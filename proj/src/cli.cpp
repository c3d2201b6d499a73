#include "flatribbon/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "flatribbon/folded_ribbon.hpp"
#include "flatribbon/generators.hpp"
#include "flatribbon/invariants.hpp"
#include "flatribbon/json_io.hpp"
#include "flatribbon/optimizer.hpp"
#include "flatribbon/render.hpp"
#include "flatribbon/ribbon_metrics.hpp"

namespace flatribbon {

namespace {

using nlohmann::ordered_json;

class CliFailure : public std::runtime_error {
 public:
  CliFailure(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct Options {
  std::string format = "json";
  std::string out_file;
  std::uint64_t seed = 1;
  bool quiet = false;

  // shared positional / per-command values
  std::string input;
  int p = 0, q = 0, n = 0, crossings = 0;
  double width = 1.0;
  bool layout_json = false;
  std::string expect;
  bool print_poly = false;
  SearchConfig search;
  std::string style = "grid";
  double cell_px = 40.0;
  bool monochrome = false;
};

std::string read_input(const std::string& name, std::istream& in) {
  if (name == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(name);
  if (!f) throw CliFailure(exit_invalid_input, "cannot read " + name);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GridDiagram load_grid(const Options& o, std::istream& in, bool require_knot = true) {
  GridDiagram d;
  try {
    d = parse_grid(read_input(o.input, in));
  } catch (const GridFormatError& e) {
    throw CliFailure(exit_invalid_input, e.what());
  }
  const auto report = validate(d);
  if (!report.ok()) throw CliFailure(exit_invalid_input, InvalidGridError(report).what());
  if (require_knot && component_count(d) != 1) {
    try {
      trace(d);
    } catch (const MultiComponentError& e) {
      throw CliFailure(exit_invalid_input, e.what());
    }
  }
  return d;
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
    return;
  }
  rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string table(const ordered_json& j) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return out;
}

void write_text(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_file, std::ios::binary);
  if (!f) throw CliFailure(exit_invalid_input, "cannot write " + o.out_file);
  f << text;
}

void emit(const Options& o, std::ostream& out, const ordered_json& payload) {
  write_text(o, out, o.format == "json" ? payload.dump(2) + "\n" : table(payload));
}

int cmd_generate(const Options& o, const std::string& family, std::ostream& out) {
  GridDiagram d;
  try {
    d = family == "torus" ? torus_grid(TorusParams(o.p, o.q)) : twist_grid(TwistParams(o.n));
  } catch (const std::invalid_argument& e) {
    throw CliFailure(exit_usage, e.what());
  }
  write_text(o, out, o.format == "json" ? grid_to_json(d).dump() + "\n" : to_string(d));
  return exit_ok;
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  GridDiagram d;
  try {
    d = parse_grid(read_input(o.input, in));
  } catch (const GridFormatError& e) {
    throw CliFailure(exit_invalid_input, e.what());
  }
  const auto report = validate(d);
  ordered_json j;
  j["valid"] = report.ok();
  j["size"] = d.size();
  j["problems"] = report.problems;
  if (report.ok()) j["components"] = component_count(d);
  emit(o, out, j);
  return report.ok() ? exit_ok : exit_invalid_input;
}

int cmd_length(const Options& o, std::istream& in, std::ostream& out) {
  emit(o, out, to_json(ribbon_length(load_grid(o, in, false))));
  return exit_ok;
}

int cmd_certify(const Options& o, const std::string& kind, std::istream& in, std::ostream& out) {
  BoundCertificate cert;
  try {
    if (kind == "torus") {
      cert = certify_torus(TorusParams(o.p, o.q));
    } else if (kind == "twist") {
      cert = certify_twist(TwistParams(o.n));
    } else {
      cert = certify_quadratic(load_grid(o, in), o.crossings);
    }
  } catch (const std::invalid_argument& e) {
    throw CliFailure(exit_usage, e.what());
  }
  emit(o, out, to_json(cert));
  const bool ok = cert.holds && cert.grid_bound_holds.value_or(true);
  return ok ? exit_ok : exit_verification_failed;
}

int cmd_fold(const Options& o, std::ostream& out) {
  if (o.n < 1) throw CliFailure(exit_usage, "--n must be a positive integer");
  if (!(o.width > 0)) throw CliFailure(exit_usage, "--width must be positive");
  // Odd n uses the mirror of the layout with one more half twist.
  const int layout_n = o.n % 2 == 0 ? o.n : o.n + 1;
  const auto layout = fold::build_layout(o.width, layout_n);
  if (o.layout_json) {
    emit(o, out, to_json(layout, true));
    return exit_ok;
  }
  const auto slope = fold::bound_vs_crossing(o.n);
  ordered_json j;
  j["half_twists"] = o.n;
  j["layout_half_twists"] = layout_n;
  j["layout"] = to_json(layout, true);
  j["total"] = j["layout"]["total"];
  j["closed_form_bound"] = fold::upper_bound(o.n) * o.width;
  j["crossing_number"] = slope.crossing_number;
  j["slope_limit"] = slope.slope_limit * o.width;
  j["slope_check"] = slope.slope_check;
  emit(o, out, j);
  return exit_ok;
}

KnotFamily parse_expectation(const std::string& text) {
  auto fail = [&]() -> KnotFamily {
    throw CliFailure(exit_usage, "--expect must look like torus:P,Q or twist:N, got \"" + text + "\"");
  };
  try {
    std::size_t used = 0;
    if (text.rfind("torus:", 0) == 0) {
      const std::string rest = text.substr(6);
      const auto comma = rest.find(',');
      if (comma == std::string::npos) return fail();
      const int p = std::stoi(rest.substr(0, comma), &used);
      if (used != comma) return fail();
      const std::string qs = rest.substr(comma + 1);
      const int q = std::stoi(qs, &used);
      if (used != qs.size()) return fail();
      return TorusParams(p, q);
    }
    if (text.rfind("twist:", 0) == 0) {
      const std::string ns = text.substr(6);
      const int n = std::stoi(ns, &used);
      if (used != ns.size()) return fail();
      return TwistParams(n);
    }
  } catch (const std::invalid_argument&) {
    return fail();
  } catch (const std::out_of_range&) {
    return fail();
  }
  return fail();
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const KnotFamily family = parse_expectation(o.expect);
  const GridDiagram d = load_grid(o, in);
  const LaurentPoly computed = alexander(d);
  const LaurentPoly expected = expected_alexander(family);
  const bool match = computed.equals_up_to_units(expected);
  ordered_json j;
  j["expected_knot"] = label(family);
  j["expected"] = expected.to_string();
  j["computed"] = computed.to_string();
  j["match"] = match;
  if (o.print_poly) j["polynomial"] = to_json(computed);
  emit(o, out, j);
  return match ? exit_ok : exit_verification_failed;
}

int cmd_optimize(const Options& o, std::istream& in, std::ostream& out) {
  SearchConfig cfg = o.search;
  cfg.seed = o.seed;
  try {
    cfg.check();
  } catch (const std::invalid_argument& e) {
    throw CliFailure(exit_usage, e.what());
  }
  const auto result = anneal(load_grid(o, in), cfg);
  ordered_json j;
  j["best"] = grid_to_json(result.best);
  j["report"] = to_json(result.report);
  emit(o, out, j);
  return exit_ok;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
  RenderStyle style;
  style.cell_px = o.cell_px;
  style.dot_radius_px = o.cell_px / 5;
  style.gap_px = o.cell_px * 0.3;
  style.monochrome_dots = o.monochrome;
  try {
    style.check();
  } catch (const std::invalid_argument& e) {
    throw CliFailure(exit_usage, e.what());
  }
  SvgDocument doc;
  if (o.input == "fold") {
    if (o.n < 1) throw CliFailure(exit_usage, "render fold needs --n");
    if (!(o.width > 0)) throw CliFailure(exit_usage, "--width must be positive");
    doc = render_fold(fold::build_layout(o.width, o.n % 2 == 0 ? o.n : o.n + 1), style);
  } else {
    const GridDiagram d = load_grid(o, in, o.style != "grid");
    if (o.style == "grid") {
      doc = render_grid(d, style);
    } else if (o.style == "knot") {
      doc = render_knot(trace(d), d.size(), style);
    } else {
      doc = render_ribbon(d, style);
    }
  }
  const std::string svg = doc.str();
  if (o.out_file.empty()) {
    out << svg;
    return exit_ok;
  }
  write_text(o, out, svg);
  ordered_json j;
  j["written"] = o.out_file;
  j["elements"] = doc.elements.size();
  j["width"] = doc.width;
  j["height"] = doc.height;
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << table(j);
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Grid diagrams, flat knotted ribbons and their length bounds", "flatribbon"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", o.out_file, "Write output to this file");
  app.add_option("--seed", o.seed, "Random seed");
  app.add_flag("--quiet", o.quiet, "Suppress diagnostics");

  auto* generate = app.add_subcommand("generate", "Emit the grid of a knot family");
  generate->require_subcommand(1);
  auto* gen_torus = generate->add_subcommand("torus", "(p,q) torus knot");
  gen_torus->add_option("--p", o.p)->required();
  gen_torus->add_option("--q", o.q)->required();
  auto* gen_twist = generate->add_subcommand("twist", "Twist knot with n half twists");
  gen_twist->add_option("--n", o.n)->required();

  auto* validate_cmd = app.add_subcommand("validate", "Check the grid rules");
  validate_cmd->add_option("file", o.input, "Grid JSON or -")->required();

  auto* length = app.add_subcommand("length", "Ribbon length of a grid");
  length->add_option("file", o.input, "Grid JSON or -")->required();

  auto* certify = app.add_subcommand("certify", "Certify a ribbon length bound");
  certify->require_subcommand(1);
  auto* cert_torus = certify->add_subcommand("torus", "Linear bound for torus knots");
  cert_torus->add_option("--p", o.p)->required();
  cert_torus->add_option("--q", o.q)->required();
  auto* cert_twist = certify->add_subcommand("twist", "Linear bound for twist knots");
  cert_twist->add_option("--n", o.n)->required();
  auto* cert_quad = certify->add_subcommand("quadratic", "Quadratic bound for any grid");
  cert_quad->add_option("file", o.input, "Grid JSON or -")->required();
  cert_quad->add_option("--crossings", o.crossings, "Crossing number of the knot")->required();

  auto* fold_cmd = app.add_subcommand("fold", "Folded twist-knot ribbon");
  fold_cmd->add_option("--n", o.n, "Half twists")->required();
  fold_cmd->add_option("--width", o.width, "Ribbon width");
  fold_cmd->add_flag("--layout-json", o.layout_json, "Print only the layout");

  auto* verify = app.add_subcommand("verify", "Compare the Alexander polynomial with a family");
  verify->add_option("file", o.input, "Grid JSON or -")->required();
  verify->add_option("--expect", o.expect, "torus:P,Q or twist:N")->required();
  verify->add_flag("--print-poly", o.print_poly, "Include the polynomial coefficients");

  auto* optimize = app.add_subcommand("optimize", "Shorten a grid by annealing over grid moves");
  optimize->add_option("file", o.input, "Grid JSON or -")->required();
  optimize->add_option("--steps", o.search.max_steps);
  optimize->add_option("--temp", o.search.initial_temperature);
  optimize->add_option("--cool", o.search.cooling_rate);
  optimize->add_option("--stab-budget", o.search.stabilization_budget);
  optimize->add_option("--restarts", o.search.restarts);

  auto* render = app.add_subcommand("render", "Draw a grid, knot, ribbon or fold as SVG");
  render->add_option("target", o.input, "Grid JSON, - or fold")->required();
  render->add_option("--style", o.style)->check(CLI::IsMember({"grid", "knot", "ribbon"}));
  render->add_option("--cell-px", o.cell_px);
  render->add_flag("--monochrome-dots", o.monochrome);
  render->add_option("--n", o.n, "Half twists for fold");
  render->add_option("--width", o.width, "Ribbon width for fold");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    if (!o.quiet) err << "flatribbon: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (generate->parsed()) return cmd_generate(o, gen_torus->parsed() ? "torus" : "twist", out);
    if (validate_cmd->parsed()) return cmd_validate(o, in, out);
    if (length->parsed()) return cmd_length(o, in, out);
    if (certify->parsed()) {
      const std::string kind = cert_torus->parsed() ? "torus" : cert_twist->parsed() ? "twist" : "quadratic";
      return cmd_certify(o, kind, in, out);
    }
    if (fold_cmd->parsed()) return cmd_fold(o, out);
    if (verify->parsed()) return cmd_verify(o, in, out);
    if (optimize->parsed()) return cmd_optimize(o, in, out);
    if (render->parsed()) return cmd_render(o, in, out);
  } catch (const CliFailure& e) {
    if (!o.quiet) err << "flatribbon: " << e.what() << "\n";
    return e.code();
  } catch (const GridError& e) {
    if (!o.quiet) err << "flatribbon: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception& e) {
    if (!o.quiet) err << "flatribbon: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace flatribbon
