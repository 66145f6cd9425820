// tmg: inspect, check, transform and generate topological multigraph drawings.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "tmg/bounds.hpp"
#include "tmg/constructions.hpp"
#include "tmg/crossings.hpp"
#include "tmg/decomposition.hpp"
#include "tmg/error.hpp"
#include "tmg/io.hpp"
#include "tmg/lens.hpp"
#include "tmg/styles.hpp"
#include "tmg/transforms.hpp"
#include "tmg/validate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct StyleFlags {
  std::string name = "separated";
  std::optional<long> m;
  std::optional<long> r;
  std::optional<std::string> girth_constant;

  tmg::StyleSpec spec() const { return tmg::parse_style(name, m, r); }

  tmg::StyleParams params() const {
    std::optional<tmg::Rational> k3;
    if (girth_constant) k3 = tmg::parse_rational(*girth_constant);
    return tmg::style_params(spec(), k3);
  }
};

void add_style_flags(CLI::App* cmd, StyleFlags& flags) {
  cmd->add_option("--style", flags.name,
                  "separated | locally-starlike | single-crossing | branching | multiplicity | girth")
      ->capture_default_str();
  cmd->add_option("--m", flags.m, "multiplicity bound (multiplicity style)");
  cmd->add_option("--r", flags.r, "girth parameter (girth style)");
  cmd->add_option("--girth-constant", flags.girth_constant,
                  "edge-count constant for the girth style (rational, default 1)");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) tmg::fail(tmg::ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

std::string format_bigfloat(const tmg::BigFloat& value) {
  std::ostringstream out;
  out << std::setprecision(6) << value;
  return out.str();
}

std::string girth_text(const std::optional<std::size_t>& girth) {
  return girth ? std::to_string(*girth) : "inf";
}

tmg::ReportFormat parse_format(const std::string& name) {
  if (name == "table") return tmg::ReportFormat::Table;
  if (name == "delimited") return tmg::ReportFormat::Delimited;
  if (name == "structured") return tmg::ReportFormat::Structured;
  tmg::fail(tmg::ErrorCode::DomainError, "unknown format '" + name + "'");
}

int run(int argc, char** argv) {
  CLI::App app{"topological multigraph drawing toolkit"};
  app.require_subcommand(1);
  int exit_code = kOk;

  // validate
  {
    auto* cmd = app.add_subcommand("validate", "check the general-position conditions");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, "drawing file")->required();
    cmd->callback([&exit_code, file]() {
      std::ifstream in(*file);
      if (!in) tmg::fail(tmg::ErrorCode::ParseError, "cannot open '" + *file + "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      const tmg::Drawing d = tmg::parse_drawing(buffer.str());
      const auto report = tmg::validate_general_position(d);
      std::cout << tmg::format_report(report);
      if (!report.ok()) exit_code = kViolation;
    });
  }

  // stats
  {
    auto* cmd = app.add_subcommand("stats", "n, e, cr, max multiplicity, girth");
    auto file = std::make_shared<std::string>();
    cmd->add_option("file", *file, "drawing file")->required();
    cmd->callback([file]() {
      const tmg::Drawing d = tmg::load_drawing_file(*file);
      std::cout << "n=" << d.vertex_count() << " e=" << d.edge_count()
                << " cr=" << tmg::crossing_number(d)
                << " max-multiplicity=" << d.max_multiplicity()
                << " girth=" << girth_text(d.girth()) << "\n";
    });
  }

  // style-check
  {
    auto* cmd = app.add_subcommand("style-check", "test a drawing against a style predicate");
    auto file = std::make_shared<std::string>();
    auto flags = std::make_shared<StyleFlags>();
    cmd->add_option("file", *file, "drawing file")->required();
    add_style_flags(cmd, *flags);
    cmd->callback([&exit_code, file, flags]() {
      const tmg::Drawing d = tmg::load_drawing_file(*file);
      const auto report = tmg::satisfies_style(d, flags->spec());
      if (report.holds) {
        std::cout << report.style << ": holds\n";
      } else {
        std::cout << report.style << ": violated - " << report.witness->description;
        if (!report.witness->edges.empty()) {
          std::cout << " edges=";
          for (std::size_t i = 0; i < report.witness->edges.size(); ++i)
            std::cout << (i ? "," : "") << report.witness->edges[i];
        }
        if (!report.witness->vertices.empty()) {
          std::cout << " vertices=";
          for (std::size_t i = 0; i < report.witness->vertices.size(); ++i)
            std::cout << (i ? "," : "") << report.witness->vertices[i];
        }
        std::cout << "\n";
        exit_code = kViolation;
      }
    });
  }

  // bisect
  {
    auto* cmd = app.add_subcommand("bisect", "style-preserving balanced bisection");
    auto file = std::make_shared<std::string>();
    auto flags = std::make_shared<StyleFlags>();
    auto use_oracle = std::make_shared<bool>(false);
    auto use_heuristic = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "drawing file")->required();
    add_style_flags(cmd, *flags);
    cmd->add_flag("--oracle", *use_oracle, "exact exhaustive search (n <= 20)");
    cmd->add_flag("--heuristic", *use_heuristic, "sweep seeds plus local search");
    cmd->callback([file, flags, use_oracle, use_heuristic]() {
      const tmg::Drawing d = tmg::load_drawing_file(*file);
      const bool oracle = *use_oracle || (!*use_heuristic && d.vertex_count() <= 20);
      const auto result = oracle ? tmg::bisection_width_oracle(d, flags->spec())
                                 : tmg::bisection_heuristic(d, flags->spec());
      std::cout << "width=" << result.width << " cutter=" << (oracle ? "oracle" : "heuristic")
                << "\n";
      auto emit = [&](const char* name, const std::vector<std::size_t>& part) {
        std::cout << name << ":";
        for (const std::size_t v : part) std::cout << " " << d.vertices()[v].id;
        std::cout << "\n";
      };
      emit("part1", result.bipartition.part1);
      emit("part2", result.bipartition.part2);
      std::cout << "cut:";
      for (const std::size_t e : result.bipartition.cut_edges)
        std::cout << " " << d.edges()[e].id;
      std::cout << "\nremoved:";
      for (const std::size_t e : result.removed_edges) std::cout << " " << d.edges()[e].id;
      std::cout << "\n";
    });
  }

  // decompose
  {
    auto* cmd = app.add_subcommand("decompose", "run the decomposition and print its trace");
    auto file = std::make_shared<std::string>();
    auto flags = std::make_shared<StyleFlags>();
    auto cutter = std::make_shared<std::string>("auto");
    cmd->add_option("file", *file, "drawing file")->required();
    add_style_flags(cmd, *flags);
    cmd->add_option("--cutter", *cutter, "oracle | heuristic | auto")->capture_default_str();
    cmd->callback([file, flags, cutter]() {
      const tmg::Drawing d = tmg::load_drawing_file(*file);
      tmg::Cutter which = tmg::Cutter::Heuristic;
      if (*cutter == "oracle" || (*cutter == "auto" && d.vertex_count() <= 20))
        which = tmg::Cutter::Oracle;
      else if (*cutter != "heuristic" && *cutter != "auto")
        tmg::fail(tmg::ErrorCode::DomainError, "unknown cutter '" + *cutter + "'");
      const auto trace = tmg::decompose(d, flags->params(), which);
      std::cout << tmg::format_trace(trace);
    });
  }

  // bound-check
  {
    auto* cmd = app.add_subcommand("bound-check", "compare cr against the style's lower bound");
    auto file = std::make_shared<std::string>();
    auto flags = std::make_shared<StyleFlags>();
    auto format = std::make_shared<std::string>("table");
    cmd->add_option("file", *file, "drawing file")->required();
    add_style_flags(cmd, *flags);
    cmd->add_option("--format", *format, "table | delimited | structured")->capture_default_str();
    cmd->callback([&exit_code, file, flags, format]() {
      const tmg::Drawing d = tmg::load_drawing_file(*file);
      const auto report = tmg::verify_crossing_lemma(d, flags->params());
      tmg::ReportSink sink({"style", "n", "e", "cr", "threshold", "bound", "headline", "ratio",
                            "verdict"},
                           parse_format(*format));
      const std::string verdict = !report.applicable ? "not-applicable"
                                  : *report.satisfied ? "satisfied"
                                                      : "VIOLATED";
      sink.add_row({report.style, std::to_string(report.n), std::to_string(report.e),
                    std::to_string(report.cr), tmg::format_rational(report.threshold),
                    format_bigfloat(report.bound), format_bigfloat(report.headline_bound),
                    report.applicable ? format_bigfloat(report.ratio) : "-", verdict});
      if (!report.footnote.empty()) sink.add_footnote(report.footnote);
      std::cout << sink.render();
      if (report.applicable && !*report.satisfied) exit_code = kViolation;
    });
  }

  // transform
  {
    auto* cmd = app.add_subcommand("transform", "split | reroute | planarize");
    auto which = std::make_shared<std::string>();
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto cap = std::make_shared<std::string>();
    auto no_endpoint = std::make_shared<bool>(false);
    cmd->add_option("operation", *which, "split | reroute | planarize")->required();
    cmd->add_option("file", *file, "drawing file")->required();
    cmd->add_option("-o,--output", *out, "output file (default stdout)");
    cmd->add_option("--d", *cap, "degree cap for split (rational; default 2e/n)");
    cmd->add_flag("--no-endpoint-lenses", *no_endpoint,
                  "reroute: skip lenses between an endpoint and a crossing");
    cmd->callback([which, file, out, cap, no_endpoint]() {
      const tmg::Drawing d = tmg::load_drawing_file(*file);
      tmg::Drawing result;
      if (*which == "split") {
        tmg::Rational degree_cap;
        if (!cap->empty()) {
          degree_cap = tmg::parse_rational(*cap);
        } else {
          if (d.vertex_count() == 0)
            tmg::fail(tmg::ErrorCode::DomainError, "empty drawing has no average degree");
          degree_cap = tmg::Rational(2 * static_cast<long>(d.edge_count())) /
                       tmg::Rational(static_cast<long>(d.vertex_count()));
          if (degree_cap < 1) degree_cap = tmg::Rational(1);
        }
        result = tmg::split_high_degree(d, degree_cap);
      } else if (*which == "reroute") {
        tmg::RerouteOptions options;
        options.endpoint_to_crossing = !*no_endpoint;
        result = tmg::reroute_to_fixpoint(d, options);
      } else if (*which == "planarize") {
        result = tmg::planarize(d);
      } else {
        tmg::fail(tmg::ErrorCode::DomainError, "unknown transform '" + *which + "'");
      }
      write_output(tmg::serialize_drawing(result), *out);
    });
  }

  // construct
  {
    auto* cmd = app.add_subcommand("construct", "generate a drawing from a named family");
    auto spec = std::make_shared<tmg::ConstructionSpec>();
    auto out = std::make_shared<std::string>();
    auto kind = std::make_shared<std::string>();
    cmd->add_option("--family", spec->family,
                    "separated-arc | convex-complete | even-cycle | random | lens-gadget")
        ->required();
    cmd->add_option("--n", spec->n, "vertex count");
    cmd->add_option("--seed", spec->seed, "random seed");
    cmd->add_option("--resolution", spec->resolution, "polyline points per arc")
        ->capture_default_str();
    cmd->add_option("--r", spec->r, "cycle parameter (even-cycle)");
    cmd->add_option("--e", spec->e, "edge count (random)");
    cmd->add_option("--kind", *kind,
                    "full-parallel-pair | between-crossings | endpoint-to-crossing");
    cmd->add_option("-o,--output", *out, "output file (default stdout)");
    cmd->callback([spec, out, kind]() {
      if (!kind->empty()) {
        if (*kind == "full-parallel-pair") spec->kind = tmg::LensKind::FullParallelPair;
        else if (*kind == "between-crossings") spec->kind = tmg::LensKind::BetweenCrossings;
        else if (*kind == "endpoint-to-crossing") spec->kind = tmg::LensKind::EndpointToCrossing;
        else tmg::fail(tmg::ErrorCode::DomainError, "unknown lens kind '" + *kind + "'");
      }
      write_output(tmg::serialize_drawing(tmg::build_construction(*spec)), *out);
    });
  }

  // render
  {
    auto* cmd = app.add_subcommand("render", "render a drawing as SVG");
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto no_crossings = std::make_shared<bool>(false);
    auto shade = std::make_shared<bool>(false);
    cmd->add_option("file", *file, "drawing file")->required();
    cmd->add_option("-o,--output", *out, "output file (default stdout)");
    cmd->add_flag("--no-crossings", *no_crossings, "omit crossing markers");
    cmd->add_flag("--shade-lenses", *shade, "shade interior-empty lenses");
    cmd->callback([file, out, no_crossings, shade]() {
      std::ifstream in(*file);
      if (!in) tmg::fail(tmg::ErrorCode::ParseError, "cannot open '" + *file + "'");
      std::ostringstream buffer;
      buffer << in.rdbuf();
      const tmg::Drawing d = tmg::load_drawing_file(*file);
      tmg::SvgOptions options;
      options.crossing_markers = !*no_crossings;
      options.shade_empty_lenses = *shade;
      options.source_label = tmg::content_hash(buffer.str());
      write_output(tmg::render_svg(d, options), *out);
    });
  }

  // report
  {
    auto* cmd = app.add_subcommand("report", "cr-vs-bound table across a family");
    auto family = std::make_shared<std::string>("separated-arc");
    auto range = std::make_shared<std::string>();
    auto resolution = std::make_shared<std::size_t>(16);
    auto format = std::make_shared<std::string>("table");
    cmd->add_option("--family", *family, "separated-arc | convex-complete")
        ->capture_default_str();
    cmd->add_option("--n-range", *range, "inclusive range A..B")->required();
    cmd->add_option("--resolution", *resolution, "polyline points per arc")
        ->capture_default_str();
    cmd->add_option("--format", *format, "table | delimited | structured")->capture_default_str();
    cmd->callback([family, range, resolution, format]() {
      const auto dots = range->find("..");
      if (dots == std::string::npos)
        tmg::fail(tmg::ErrorCode::DomainError, "range must look like 4..8");
      const std::size_t lo = std::stoul(range->substr(0, dots));
      const std::size_t hi = std::stoul(range->substr(dots + 2));
      if (lo < 3 || hi < lo) tmg::fail(tmg::ErrorCode::DomainError, "bad range");
      tmg::ReportSink sink({"style", "n", "e", "cr", "threshold", "bound", "headline", "ratio",
                            "verdict"},
                           parse_format(*format));
      std::string footnote;
      for (std::size_t n = lo; n <= hi; ++n) {
        tmg::Drawing d;
        tmg::StyleParams params = tmg::style_params(tmg::StyleSpec::separated());
        if (*family == "separated-arc") {
          d = tmg::separated_arc_construction(n, *resolution);
        } else if (*family == "convex-complete") {
          d = tmg::convex_complete(n);
          params = tmg::style_params(tmg::StyleSpec::multiplicity(1));
        } else {
          tmg::fail(tmg::ErrorCode::DomainError, "unknown family '" + *family + "'");
        }
        const auto report = tmg::verify_crossing_lemma(d, params);
        const std::string verdict = !report.applicable ? "not-applicable"
                                    : *report.satisfied ? "satisfied"
                                                        : "VIOLATED";
        sink.add_row({report.style, std::to_string(report.n), std::to_string(report.e),
                      std::to_string(report.cr), tmg::format_rational(report.threshold),
                      format_bigfloat(report.bound), format_bigfloat(report.headline_bound),
                      report.applicable ? format_bigfloat(report.ratio) : "-", verdict});
        footnote = report.footnote;
      }
      if (!footnote.empty()) sink.add_footnote(footnote);
      std::cout << sink.render();
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kOk;  // --help
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const tmg::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
