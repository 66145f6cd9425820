#include "tmg/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "tmg/crossings.hpp"
#include "tmg/error.hpp"
#include "tmg/lens.hpp"
#include "tmg/rational.hpp"
#include "tmg/validate.hpp"

namespace tmg {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return tokens;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& message) {
  fail(ErrorCode::ParseError,
       "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message);
}

Rational parse_coord(const Token& token, std::size_t line) {
  try {
    return parse_rational(token.text);
  } catch (const Error&) {
    parse_fail(line, token.column, "bad rational '" + token.text + "'");
  }
}

}  // namespace

Drawing parse_drawing(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool saw_header = false;
  Drawing d;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!saw_header) {
      if (tokens.size() != 2 || tokens[0].text != "TMGD" || tokens[1].text != "1")
        parse_fail(lineno, tokens[0].column, "expected header 'TMGD 1'");
      saw_header = true;
      continue;
    }
    try {
      if (tokens[0].text == "V") {
        if (tokens.size() != 4) parse_fail(lineno, tokens[0].column, "V needs: id x y");
        d.add_vertex(tokens[1].text,
                     Point{parse_coord(tokens[2], lineno), parse_coord(tokens[3], lineno)});
      } else if (tokens[0].text == "E") {
        if (tokens.size() < 8 || (tokens.size() - 4) % 2 != 0)
          parse_fail(lineno, tokens[0].column,
                     "E needs: id u v followed by at least two coordinate pairs");
        std::vector<Point> pts;
        for (std::size_t i = 4; i + 1 < tokens.size(); i += 2) {
          pts.push_back(Point{parse_coord(tokens[i], lineno), parse_coord(tokens[i + 1], lineno)});
        }
        d.add_edge(tokens[1].text, tokens[2].text, tokens[3].text, Polyline(std::move(pts)));
      } else {
        parse_fail(lineno, tokens[0].column, "unknown record '" + tokens[0].text + "'");
      }
    } catch (const Error& err) {
      if (err.code() == ErrorCode::ParseError) throw;
      fail(ErrorCode::InvariantViolation,
           "line " + std::to_string(lineno) + ": " + err.what());
    }
  }
  if (!saw_header) fail(ErrorCode::ParseError, "missing header 'TMGD 1'");
  return d;
}

std::string serialize_drawing(const Drawing& d) {
  std::ostringstream out;
  out << "TMGD 1\n";
  for (const auto& v : d.vertices()) {
    out << "V " << v.id << " " << format_rational(v.position.x) << " "
        << format_rational(v.position.y) << "\n";
  }
  for (const auto& e : d.edges()) {
    out << "E " << e.id << " " << e.u << " " << e.v;
    for (const auto& p : e.curve.points()) {
      out << " " << format_rational(p.x) << " " << format_rational(p.y);
    }
    out << "\n";
  }
  return out.str();
}

Drawing load_drawing_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  Drawing d = parse_drawing(buffer.str());
  const auto report = validate_general_position(d);
  if (!report.ok())
    fail(ErrorCode::InvariantViolation, "'" + path + "' violates general position:\n" +
                                            format_report(report));
  return d;
}

void save_drawing_file(const Drawing& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << serialize_drawing(d);
}

std::string content_hash(const std::string& bytes) {
  std::uint64_t hash = 14695981039346656037ull;
  for (const char c : bytes) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

namespace {

std::string fmt(double value) {
  std::ostringstream out;
  out << std::setprecision(8) << value;
  return out.str();
}

}  // namespace

std::string render_svg(const Drawing& d, const SvgOptions& options) {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  bool first = true;
  auto grow = [&](const Point& p) {
    const double x = to_double(p.x);
    const double y = to_double(p.y);
    if (first) {
      x0 = x1 = x;
      y0 = y1 = y;
      first = false;
    } else {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y);
      y1 = std::max(y1, y);
    }
  };
  for (const auto& v : d.vertices()) grow(v.position);
  for (const auto& e : d.edges()) {
    for (const auto& p : e.curve.points()) grow(p);
  }
  const double margin = options.margin + (first ? 0 : 0.02 * std::max(x1 - x0, y1 - y0));
  x0 -= margin;
  y0 -= margin;
  x1 += margin;
  y1 += margin;
  const double scale = std::max(x1 - x0, y1 - y0);
  const double stroke = scale / 400;
  auto X = [&](const Point& p) { return to_double(p.x); };
  auto Y = [&](const Point& p) { return y1 + y0 - to_double(p.y); };  // flip y

  std::ostringstream out;
  const std::string label =
      options.source_label.empty() ? content_hash(serialize_drawing(d)) : options.source_label;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<!-- source: " << label << " -->\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(x0) << " "
      << fmt(y0) << " " << fmt(x1 - x0) << " " << fmt(y1 - y0) << "\">\n";

  if (options.shade_empty_lenses) {
    try {
      for (const auto& lens : empty_lenses(d)) {
        out << "  <polygon class=\"lens\" fill=\"#f4c7c3\" stroke=\"none\" points=\"";
        const auto& pts = lens.boundary.points();
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
          out << (i ? " " : "") << fmt(X(pts[i])) << "," << fmt(Y(pts[i]));
        }
        out << "\"/>\n";
      }
    } catch (const Error&) {
      // Shading is cosmetic; skip it for drawings that defeat lens analysis.
    }
  }

  for (const auto& e : d.edges()) {
    out << "  <path class=\"edge\" fill=\"none\" stroke=\"#1a4a7a\" stroke-width=\""
        << fmt(stroke) << "\" d=\"";
    const auto& pts = e.curve.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      out << (i == 0 ? "M" : " L") << fmt(X(pts[i])) << " " << fmt(Y(pts[i]));
    }
    out << "\"/>\n";
  }
  for (const auto& v : d.vertices()) {
    out << "  <circle class=\"vertex\" fill=\"#222\" r=\"" << fmt(2.2 * stroke) << "\" cx=\""
        << fmt(X(v.position)) << "\" cy=\"" << fmt(Y(v.position)) << "\"/>\n";
  }
  if (options.crossing_markers) {
    try {
      const double arm = 2.5 * stroke;
      for (const auto& c : crossings(d)) {
        const double cx = X(c.at);
        const double cy = Y(c.at);
        out << "  <path class=\"crossing\" stroke=\"#c0392b\" stroke-width=\"" << fmt(stroke)
            << "\" d=\"M" << fmt(cx - arm) << " " << fmt(cy - arm) << " L" << fmt(cx + arm) << " "
            << fmt(cy + arm) << " M" << fmt(cx - arm) << " " << fmt(cy + arm) << " L"
            << fmt(cx + arm) << " " << fmt(cy - arm) << "\"/>\n";
      }
    } catch (const Error&) {
      // No markers for drawings whose crossings are not well defined.
    }
  }
  out << "</svg>\n";
  return out.str();
}

ReportSink::ReportSink(std::vector<std::string> columns, ReportFormat format)
    : columns_(std::move(columns)), format_(format) {}

void ReportSink::add_row(std::vector<std::string> cells) {
  cells.resize(columns_.size());
  rows_.push_back(std::move(cells));
}

void ReportSink::add_footnote(std::string note) { footnotes_.push_back(std::move(note)); }

namespace {

std::string json_escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string ReportSink::render() const {
  std::ostringstream out;
  switch (format_) {
    case ReportFormat::Table: {
      std::vector<std::size_t> widths;
      for (std::size_t c = 0; c < columns_.size(); ++c) {
        std::size_t w = columns_[c].size();
        for (const auto& row : rows_) w = std::max(w, row[c].size());
        widths.push_back(w);
      }
      auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < columns_.size(); ++c) {
          out << (c ? "  " : "") << std::left << std::setw(static_cast<int>(widths[c]))
              << cells[c];
        }
        out << "\n";
      };
      emit(columns_);
      for (const auto& row : rows_) emit(row);
      break;
    }
    case ReportFormat::Delimited: {
      for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "\t" : "") << columns_[c];
      out << "\n";
      for (const auto& row : rows_) {
        for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "\t" : "") << row[c];
        out << "\n";
      }
      break;
    }
    case ReportFormat::Structured: {
      out << "[\n";
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        out << "  {";
        for (std::size_t c = 0; c < columns_.size(); ++c) {
          out << (c ? ", " : "") << "\"" << json_escape(columns_[c]) << "\": \""
              << json_escape(rows_[r][c]) << "\"";
        }
        out << "}" << (r + 1 < rows_.size() ? "," : "") << "\n";
      }
      out << "]\n";
      break;
    }
  }
  for (const auto& note : footnotes_) out << "# " << note << "\n";
  return out.str();
}

}  // namespace tmg
