#include "znp/report.hpp"

#include <algorithm>
#include <sstream>

namespace znp {

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::holds:
      return kExitPass;
    case Verdict::fails:
      return kExitFail;
    case Verdict::undecided:
      return kExitUndecided;
  }
  return kExitFail;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char c : f) {
      if (c == '"') out += '"';
      out += c;
    }
    out += '"';
  }
  return out + '\n';
}

namespace {

constexpr double kWidth = 480, kHeight = 320, kMargin = 40;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

void frame(std::ostringstream& os, const std::string& title) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight << "\">\n"
     << "<text x=\"" << kMargin << "\" y=\"20\" font-size=\"14\">" << escape(title) << "</text>\n"
     << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
     << kHeight - kMargin << "\" stroke=\"#000\"/>\n"
     << "<line x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin << "\" y2=\"" << kHeight - kMargin
     << "\" stroke=\"#000\"/>\n";
}

}  // namespace

std::string svg_line_plot(const std::string& title, const std::vector<std::pair<double, double>>& points) {
  std::ostringstream os;
  frame(os, title);
  if (!points.empty()) {
    double xmax = 0, ymax = 0;
    for (const auto& [x, y] : points) {
      xmax = std::max(xmax, x);
      ymax = std::max(ymax, y);
    }
    if (xmax <= 0) xmax = 1;
    if (ymax <= 0) ymax = 1;
    os << "<polyline fill=\"none\" stroke=\"#235\" points=\"";
    for (const auto& [x, y] : points)
      os << kMargin + (kWidth - 2 * kMargin) * x / xmax << "," << kHeight - kMargin - (kHeight - 2 * kMargin) * y / ymax
         << " ";
    os << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string svg_bar_chart(const std::string& title, const std::vector<double>& values) {
  std::ostringstream os;
  frame(os, title);
  if (!values.empty()) {
    const double vmax = std::max(1.0, *std::max_element(values.begin(), values.end()));
    const double w = (kWidth - 2 * kMargin) / static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double h = (kHeight - 2 * kMargin) * values[i] / vmax;
      os << "<rect x=\"" << kMargin + w * static_cast<double>(i) + 1 << "\" y=\"" << kHeight - kMargin - h
         << "\" width=\"" << std::max(1.0, w - 2) << "\" height=\"" << h << "\" fill=\"#6a8\"/>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace znp
