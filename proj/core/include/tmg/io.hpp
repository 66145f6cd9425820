#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tmg/drawing.hpp"

namespace tmg {

// Line-oriented drawing format:
//   TMGD 1
//   V <id> <x> <y>
//   E <id> <u> <v> <x1> <y1> ... <xk> <yk>
// Coordinates are exact rationals ("p" or "p/q"); '#' starts a comment.
// Parse errors carry line/column; structural violations are reported with
// the validator's findings.
Drawing parse_drawing(const std::string& text);
std::string serialize_drawing(const Drawing& d);

Drawing load_drawing_file(const std::string& path);
void save_drawing_file(const Drawing& d, const std::string& path);

struct SvgOptions {
  bool crossing_markers = true;
  bool shade_empty_lenses = false;
  double margin = 1.0;
  std::string source_label;  // recorded in the header comment
};

// Deterministic SVG: one path per edge, one circle per vertex, optional
// crossing markers and empty-lens shading. Coordinates are doubles;
// exactness lives in the drawing, not the picture.
std::string render_svg(const Drawing& d, const SvgOptions& options = {});

// 64-bit FNV-1a, for content labels in rendered output.
std::string content_hash(const std::string& bytes);

enum class ReportFormat { Table, Delimited, Structured };

// Row-oriented report writer with a fixed column order; renders aligned
// text, tab-delimited lines, or a JSON array of objects.
class ReportSink {
 public:
  ReportSink(std::vector<std::string> columns, ReportFormat format);

  void add_row(std::vector<std::string> cells);
  void add_footnote(std::string note);
  std::string render() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> footnotes_;
  ReportFormat format_;
};

}  // namespace tmg
