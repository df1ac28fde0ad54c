#include "zzl/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "zzl/diagram.hpp"
#include "zzl/error.hpp"
#include "zzl/layout.hpp"
#include "zzl/lp.hpp"
#include "zzl/poset.hpp"
#include "zzl/render.hpp"

namespace zzl::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Input problems that map to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An invalid diagram; carries the report.
class InvalidDiagram : public Error {
 public:
  explicit InvalidDiagram(std::vector<diagram::Issue> issues)
      : Error("diagram is not valid"), issues_(std::move(issues)) {}
  const std::vector<diagram::Issue>& issues() const noexcept { return issues_; }

 private:
  std::vector<diagram::Issue> issues_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// A file path, or the name of a builtin example.
diagram::Document load(const std::string& input) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) return diagram::parse(read_file(input));
  if (const diagram::Example* e = diagram::find_example(input)) return e->document;
  throw InputError("'" + input + "' is neither a file nor a builtin example");
}

diagram::Document load_valid(const std::string& input) {
  diagram::Document doc = load(input);
  auto issues = diagram::validate(doc.diagram, doc.signature);
  if (!issues.empty()) throw InvalidDiagram(std::move(issues));
  return doc;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << text)) throw InputError("cannot write '" + path + "'");
}

Json path_json(const diagram::PointPath& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(x.to_string());
  return a;
}

std::string injection_report(const diagram::Document& doc) {
  if (doc.diagram.dimension() < 2) {
    throw InputError("inject needs a diagram of dimension at least 2");
  }
  const poset::PosetFunctor p =
      layout::singular_poset_diagram(diagram::explode(doc.diagram, 1));
  return poset::to_debug_json(p, poset::injectify(p));
}

std::string solution_json(const lp::LinearProgram& program, const lp::LpSolution& s) {
  Json j = Json::object();
  j["status"] = lp::to_string(s.status);
  if (s.status == lp::Status::Optimal) {
    j["objective"] = s.objective;
    Json a = Json::object();
    for (std::size_t k = 0; k < program.variable_count(); ++k) {
      a[program.variables()[k].name] = s.assignment[k];
    }
    j["assignment"] = std::move(a);
  } else {
    j["objective"] = nullptr;
    j["assignment"] = Json::object();
  }
  return j.dump(2) + "\n";
}

struct Failure {
  int status;
  std::string kind;
  std::string message;
  std::string location;
  std::vector<diagram::Issue> issues;
};

void report(const Failure& f, bool json, std::ostream& err) {
  if (!json) {
    err << "error: " << f.message << "\n";
    for (const auto& issue : f.issues) err << "  " << issue.to_string() << "\n";
    return;
  }
  Json e = Json::object();
  e["kind"] = f.kind;
  e["message"] = f.message;
  if (!f.location.empty()) e["location"] = f.location;
  if (!f.issues.empty()) {
    Json issues = Json::array();
    for (const auto& i : f.issues) {
      issues.push_back(Json{{"path", path_json(i.path)}, {"message", i.message}});
    }
    e["issues"] = std::move(issues);
  }
  err << Json{{"error", std::move(e)}, {"exit", f.status}}.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Layout and rendering of n-diagrams"};
  app.name("zzlayout");
  app.require_subcommand(1);
  app.fallthrough();
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors, "Machine-readable errors on stderr");

  std::string input, output, pairs = "cover";
  bool canonical = false;
  double scale = 0.0;
  auto add_pairs = [&](CLI::App* c) {
    c->add_option("--pairs", pairs, "Index pairs for the fairness constraints")
        ->check(CLI::IsMember({"cover", "all"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "Check a diagram against its signature");
  validate->add_option("input", input, "Diagram file or builtin example")->required();

  CLI::App* layout_cmd = app.add_subcommand("layout", "Compute a layout (JSON)");
  layout_cmd->add_option("input", input, "Diagram file or builtin example")->required();
  layout_cmd->add_option("-o,--output", output, "Output file");
  layout_cmd->add_flag("--canonical", canonical, "Compact single-line output");
  add_pairs(layout_cmd);

  CLI::App* render_cmd = app.add_subcommand("render", "Render: SVG up to dimension 2, scene JSON for 3 and 4");
  render_cmd->add_option("input", input, "Diagram file or builtin example")->required();
  render_cmd->add_option("-o,--output", output, "Output file");
  render_cmd->add_option("--scale", scale, "Units per layout coordinate")
      ->check(CLI::PositiveNumber);
  add_pairs(render_cmd);

  CLI::App* inject = app.add_subcommand("inject", "Injectification of the once-exploded diagram (JSON)");
  inject->add_option("input", input, "Diagram file or builtin example")->required();
  inject->add_option("-o,--output", output, "Output file");

  std::string example_name;
  CLI::App* examples = app.add_subcommand("examples", "List builtin examples, or print one");
  examples->add_option("name", example_name, "Example to print");
  examples->add_option("-o,--output", output, "Output file");
  examples->add_flag("--canonical", canonical, "Compact single-line output");

  CLI::App* solve_lp = app.add_subcommand("solve-lp", "Solve an LP text file");
  solve_lp->add_option("input", input, "LP file")->required();
  solve_lp->add_option("-o,--output", output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    report({kInputError, "usage", e.what(), "", {}}, json_errors, err);
    return kInputError;
  }

  layout::LayoutOptions lopts;
  lopts.pairs = pairs == "all" ? layout::PairMode::All : layout::PairMode::Covers;

  try {
    if (validate->parsed()) {
      std::vector<diagram::Issue> issues;
      std::size_t dimension = 0;
      try {
        const diagram::Document doc = load(input);
        issues = diagram::validate(doc.diagram, doc.signature);
        dimension = doc.diagram.dimension();
      } catch (const diagram::ShapeError& e) {
        issues.push_back(e.issue());
      }
      if (issues.empty()) {
        out << "valid: " << dimension << "-diagram\n";
        return kOk;
      }
      out << "invalid: " << issues.size() << (issues.size() == 1 ? " issue\n" : " issues\n");
      for (const auto& i : issues) out << "  " << i.to_string() << "\n";
      if (json_errors) report({kInvalid, "validation", "diagram is not valid", "", issues}, true, err);
      return kInvalid;
    }
    if (layout_cmd->parsed()) {
      const diagram::Document doc = load_valid(input);
      emit(layout::to_json(layout::diagram_layout(doc.diagram, lopts), canonical) + (canonical ? "\n" : ""), output, out);
      return kOk;
    }
    if (render_cmd->parsed()) {
      const diagram::Document doc = load_valid(input);
      render::RenderOptions ropts;
      ropts.layout = lopts;
      ropts.scale = scale;
      emit(render::render(doc, ropts), output, out);
      return kOk;
    }
    if (inject->parsed()) {
      emit(injection_report(load_valid(input)), output, out);
      return kOk;
    }
    if (examples->parsed()) {
      if (example_name.empty()) {
        std::string list;
        for (const auto& e : diagram::builtin_examples()) {
          list += e.name + "\t" + std::to_string(e.document.diagram.dimension()) + "\t" +
                  e.description + "\n";
        }
        emit(list, output, out);
        return kOk;
      }
      const diagram::Example* e = diagram::find_example(example_name);
      if (e == nullptr) throw InputError("no builtin example named '" + example_name + "'");
      emit(diagram::serialize(e->document, canonical) + (canonical ? "\n" : ""), output, out);
      return kOk;
    }
    if (solve_lp->parsed()) {
      const lp::LinearProgram program = lp::parse_lp_text(read_file(input));
      emit(solution_json(program, lp::solve(program)), output, out);
      return kOk;
    }
  } catch (const InvalidDiagram& e) {
    report({kInvalid, "validation", e.what(), "", e.issues()}, json_errors, err);
    return kInvalid;
  } catch (const diagram::ShapeError& e) {
    report({kInvalid, "validation", e.what(), e.location(), {e.issue()}}, json_errors, err);
    return kInvalid;
  } catch (const ParseError& e) {
    report({kInputError, "parse", e.what(), e.location(), {}}, json_errors, err);
    return kInputError;
  } catch (const InputError& e) {
    report({kInputError, "input", e.what(), "", {}}, json_errors, err);
    return kInputError;
  } catch (const ValidationError& e) {
    report({kInvalid, "validation", e.what(), "", {}}, json_errors, err);
    return kInvalid;
  } catch (const StructuralError& e) {
    report({kInvalid, "structure", e.what(), "", {}}, json_errors, err);
    return kInvalid;
  } catch (const ArgumentError& e) {
    report({kInputError, "argument", e.what(), "", {}}, json_errors, err);
    return kInputError;
  } catch (const std::exception& e) {
    report({kInternalError, "internal", e.what(), "", {}}, json_errors, err);
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace zzl::cli
