// Command line front end: validation, core extraction and classification,
// word reduction and equality, centralizers, elliptic conjugacy, twists,
// and the full analysis report.
//
// Exit codes: 0 success, 1 validation/word error, 2 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gog/analyze.hpp"
#include "gog/core_extraction.hpp"
#include "gog/development.hpp"
#include "gog/dot.hpp"
#include "gog/error.hpp"
#include "gog/parse.hpp"
#include "gog/rewrite.hpp"
#include "gog/twist.hpp"

namespace {

int exit_code = 0;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) gog::fail(gog::ErrorCode::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) gog::fail(gog::ErrorCode::IoError, "cannot write " + path);
  out << content;
  if (!out) gog::fail(gog::ErrorCode::IoError, "cannot write " + path);
}

gog::GraphOfGroupsSpec load_spec(const std::string& path) {
  return gog::parse_spec(read_file(path));
}

gog::Integer parse_integer(const std::string& text, const std::string& what) {
  try {
    return gog::Integer(text);
  } catch (const std::exception&) {
    gog::fail(gog::ErrorCode::SyntaxError, what + " must be a decimal integer: " + text);
  }
}

// Limit options shared by the exploring subcommands.
struct LimitArgs {
  int max_vertices = 256;
  std::string max_index = "1000000000";

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-vertices", max_vertices, "development ball vertex cap")
        ->capture_default_str();
    cmd->add_option("--max-index", max_index, "development ball index magnitude cap")
        ->capture_default_str();
  }

  gog::BallLimits limits() const {
    gog::BallLimits l;
    l.max_vertices = max_vertices;
    l.max_abs_index = parse_integer(max_index, "--max-index");
    if (l.max_vertices <= 0 || l.max_abs_index <= 0)
      gog::fail(gog::ErrorCode::SyntaxError, "limits must be positive");
    return l;
  }
};

std::string edge_summary(const gog::GBSGraph& g) {
  std::vector<int> geometric;
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.primary(e) == e) geometric.push_back(e);
  std::sort(geometric.begin(), geometric.end(),
            [&](int a, int b) { return g.edge_id(a) < g.edge_id(b); });
  std::string out = "[";
  for (size_t i = 0; i < geometric.size(); ++i) {
    int e = geometric[i];
    if (i) out += ", ";
    out += g.edge_id(e) + "(" + gog::to_string(g.label(gog::GBSGraph::reverse(e))) +
           "," + gog::to_string(g.label(e)) + ")";
  }
  return out + "]";
}

std::string vertex_summary(const gog::GBSGraph& g) {
  std::string out = "[";
  bool first = true;
  for (int v : g.vertices_by_id()) {
    if (!first) out += ", ";
    first = false;
    out += g.vertex_id(v);
  }
  return out + "]";
}

void cmd_validate(const std::string& file) {
  gog::SpecDocument doc = gog::parse_document(read_file(file));
  gog::ValidationReport report = gog::validate(doc);
  if (report.ok()) {
    std::cout << "ok\n";
    return;
  }
  for (const gog::Violation& v : report.entries)
    std::cout << gog::error_code_name(v.code) << " " << v.subject << ": " << v.detail
              << "\n";
  exit_code = 1;
}

void cmd_core(const std::string& file) {
  gog::CoreDecomposition core = gog::extract_core(load_spec(file));
  std::cout << "components: " << core.component_count() << "\n";
  for (int c = 0; c < core.component_count(); ++c) {
    const gog::GBSGraph& g = core.components[c];
    std::cout << "D" << c + 1 << ": vertices " << vertex_summary(g) << "; edges "
              << edge_summary(g) << "\n";
  }
}

void cmd_classify(const std::string& file) {
  gog::CoreDecomposition core = gog::extract_core(load_spec(file));
  for (int c = 0; c < core.component_count(); ++c)
    std::cout << "D" << c + 1 << ": "
              << gog::component_class_name(gog::classify_component(core.components[c]))
              << "\n";
}

void cmd_reduce(const std::string& file, const std::string& word) {
  gog::CoreDecomposition core = gog::extract_core(load_spec(file));
  std::cout << gog::canonical_form(gog::Word::parse(core.core, word)).str() << "\n";
}

void cmd_equal(const std::string& file, const std::string& left, const std::string& right) {
  gog::CoreDecomposition core = gog::extract_core(load_spec(file));
  bool eq = gog::equals(gog::Word::parse(core.core, left), gog::Word::parse(core.core, right));
  std::cout << (eq ? "equal" : "not equal") << "\n";
  if (!eq) exit_code = 1;
}

void cmd_centralizer(const std::string& file, const std::string& vertex,
                     const std::string& power, const LimitArgs& largs) {
  gog::CoreDecomposition core = gog::extract_core(load_spec(file));
  gog::Integer n = parse_integer(power, "--power");
  gog::CentralizerReport report =
      gog::centralizer_of_power(core.core, vertex, n, largs.limits());
  std::cout << "status: " << (report.complete() ? "complete" : "truncated") << "\n";
  std::cout << "ball: " << report.ball.vertex_count() << " vertices, "
            << report.ball.graph().edge_count() / 2 << " edges\n";
  if (report.presentation) {
    std::cout << "presentation: " << report.presentation->str() << "\n";
  } else {
    std::cout << "presentation omitted: exploration hit the limits\n";
  }
}

void cmd_conjugate(const std::string& file, const std::vector<std::string>& pairs,
                   const LimitArgs& largs) {
  gog::CoreDecomposition core = gog::extract_core(load_spec(file));
  for (const std::string& spec : pairs) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 4)
      gog::fail(gog::ErrorCode::SyntaxError, "--pairs wants v,n,u,m: " + spec);
    gog::Integer n = parse_integer(parts[1], "pair index");
    gog::Integer m = parse_integer(parts[3], "pair index");
    gog::ConjugacyResult result =
        gog::elliptic_conjugate(core.core, parts[0], n, parts[2], m, largs.limits());
    std::cout << "(" << parts[0] << "," << parts[1] << ") ~ (" << parts[2] << ","
              << parts[3] << "): " << gog::conjugacy_answer_name(result.answer);
    if (result.witness) std::cout << " witness " << result.witness->str();
    std::cout << "\n";
    if (result.answer == gog::ConjugacyAnswer::No) exit_code = 1;
  }
}

void cmd_twist(const std::string& file, const std::vector<std::string>& assignments,
               bool check_fixes, const LimitArgs& largs) {
  gog::CoreDecomposition core = gog::extract_core(load_spec(file));
  const gog::GBSGraph& g = core.core;
  gog::CentralizerAssignment c;
  for (const std::string& a : assignments) {
    size_t at = a.find('=');
    if (at == std::string::npos)
      gog::fail(gog::ErrorCode::SyntaxError, "--twist wants root=<word>: " + a);
    std::string root = a.substr(0, at);
    c.insert_or_assign(root, gog::Word::parse(g, a.substr(at + 1)));
  }
  auto [theta, theta_inv] = gog::twist_from_centralizers(g, c);
  for (int e = 0; e < g.edge_count(); e += 2)
    std::cout << "theta(" << g.edge_id(e) << ") = " << theta.image(e).str() << "\n";
  if (check_fixes) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const std::string& id = g.vertex_id(v);
      gog::ComponentBall ball = gog::component_ball(g, id, 1, largs.limits());
      std::vector<gog::Word> samples = gog::centralizer_samples(ball, 10);
      bool ok = gog::fixes_centralizer_check(theta, id, samples);
      std::cout << "fixes C(" << id << "): " << (ok ? "yes" : "no") << " ("
                << samples.size() << " samples)\n";
      if (!ok) exit_code = 1;
    }
  }
}

void cmd_analyze(const std::string& file, const std::string& format,
                 const std::string& dot_out, const LimitArgs& largs) {
  gog::GraphOfGroupsSpec spec = load_spec(file);
  gog::AnalysisReport report = gog::analyze(spec, largs.limits());
  std::cout << gog::render_report(report, format == "machine"
                                              ? gog::ReportFormat::Machine
                                              : gog::ReportFormat::Text);
  if (!dot_out.empty()) {
    gog::CoreDecomposition core = gog::extract_core(spec);
    gog::DotOptions options;
    options.name = "gbs_core";
    write_file(dot_out, gog::export_dot(core.core, options));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphs of groups with cyclic edge groups: words, centralizers, GBS core"};
  app.require_subcommand(1);

  std::string file, word, left, right, vertex, power, format = "text", dot_out;
  std::vector<std::string> pairs, twists;
  bool check_fixes = false;
  LimitArgs largs_centralizer, largs_conjugate, largs_twist, largs_analyze;

  CLI::App* validate = app.add_subcommand("validate", "check a gogspec-v1 document");
  validate->add_option("file", file)->required();
  validate->callback([&] { cmd_validate(file); });

  CLI::App* core = app.add_subcommand("core", "extract the GBS core and its components");
  core->add_option("file", file)->required();
  core->callback([&] { cmd_core(file); });

  CLI::App* classify = app.add_subcommand("classify", "classify the core components");
  classify->add_option("file", file)->required();
  classify->callback([&] { cmd_classify(file); });

  CLI::App* reduce = app.add_subcommand("reduce", "canonical form of a word over the core");
  reduce->add_option("file", file)->required();
  reduce->add_option("--word", word, "word in token grammar")->required();
  reduce->callback([&] { cmd_reduce(file, word); });

  CLI::App* equal = app.add_subcommand("equal", "decide equality of two words");
  equal->add_option("file", file)->required();
  equal->add_option("--left", left)->required();
  equal->add_option("--right", right)->required();
  equal->callback([&] { cmd_equal(file, left, right); });

  CLI::App* centralizer =
      app.add_subcommand("centralizer", "centralizer of a root power via the development");
  centralizer->add_option("file", file)->required();
  centralizer->add_option("--vertex", vertex, "core vertex (root id)")->required();
  centralizer->add_option("--power", power, "nonzero exponent")->required();
  largs_centralizer.attach(centralizer);
  centralizer->callback(
      [&] { cmd_centralizer(file, vertex, power, largs_centralizer); });

  CLI::App* conjugate =
      app.add_subcommand("conjugate", "elliptic conjugacy of root powers");
  conjugate->add_option("file", file)->required();
  conjugate->add_option("--pairs", pairs, "v,n,u,m")->required();
  largs_conjugate.attach(conjugate);
  conjugate->callback([&] { cmd_conjugate(file, pairs, largs_conjugate); });

  CLI::App* twist = app.add_subcommand("twist", "centralizer twist from per-root words");
  twist->add_option("file", file)->required();
  twist->add_option("--twist", twists, "root=<word>, repeatable");
  twist->add_flag("--check-fixes-centralizers", check_fixes,
                  "verify the twist fixes sampled centralizer elements");
  largs_twist.attach(twist);
  twist->callback([&] { cmd_twist(file, twists, check_fixes, largs_twist); });

  CLI::App* analyze = app.add_subcommand("analyze", "full core/kernel-case report");
  analyze->add_option("file", file)->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "machine"}));
  analyze->add_option("--dot", dot_out, "write the core as Graphviz DOT");
  largs_analyze.attach(analyze);
  analyze->callback([&] { cmd_analyze(file, format, dot_out, largs_analyze); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const gog::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
