#include "fifogap/svg_plot.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <vector>

#include <fmt/format.h>

#include "fifogap/error.hpp"

namespace fifogap {
namespace {

constexpr double kPanelW = 420.0;
constexpr double kPanelH = 300.0;
constexpr double kMarginL = 70.0;
constexpr double kMarginT = 50.0;
constexpr double kGutter = 110.0;
constexpr double kWidth = kMarginL + 2 * kPanelW + kGutter + 30.0;
constexpr double kHeight = kMarginT + kPanelH + 70.0;

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string num(double v) { return fmt::format("{:.2f}", v); }

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double t(double v) const {
    if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    return (v - lo) / (hi - lo);
  }
};

Axis make_axis(std::vector<double> values, bool allow_log) {
  Axis ax;
  if (values.empty()) return ax;
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  ax.lo = *mn;
  ax.hi = *mx;
  ax.log = allow_log && ax.lo > 0.0 && ax.hi / ax.lo > 100.0;
  if (ax.log) {
    ax.lo = std::pow(10.0, std::floor(std::log10(ax.lo)));
    ax.hi = std::pow(10.0, std::ceil(std::log10(ax.hi)));
    if (ax.hi <= ax.lo) ax.hi = ax.lo * 10.0;
  } else {
    const double pad = ax.hi > ax.lo ? 0.05 * (ax.hi - ax.lo) : std::max(1.0, std::abs(ax.lo) * 0.1);
    ax.lo -= pad;
    ax.hi += pad;
  }
  return ax;
}

class Panel {
 public:
  Panel(double x0, double y0, Axis x, Axis y) : x0_(x0), y0_(y0), x_(x), y_(y) {}

  double px(double v) const { return x0_ + x_.t(v) * kPanelW; }
  double py(double v) const { return y0_ + (1.0 - y_.t(v)) * kPanelH; }

  void frame(std::string& out, std::string_view title, std::string_view ylabel,
             const std::vector<double>& xticks) const {
    out += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#333\"/>\n",
        num(x0_), num(y0_), num(kPanelW), num(kPanelH));
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
        num(x0_ + kPanelW / 2), num(y0_ - 12), escape(title));
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-size=\"12\">block size (gas)</text>\n",
        num(x0_ + kPanelW / 2), num(y0_ + kPanelH + 38));
    out += fmt::format(
        "<text transform=\"translate({},{}) rotate(-90)\" text-anchor=\"middle\" "
        "font-size=\"12\">{}</text>\n",
        num(x0_ - 50), num(y0_ + kPanelH / 2), escape(ylabel));
    for (double xt : xticks) {
      out += fmt::format(
          "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#333\"/>"
          "<text x=\"{0}\" y=\"{3}\" text-anchor=\"middle\" font-size=\"10\">{4}</text>\n",
          num(px(xt)), num(y0_ + kPanelH), num(y0_ + kPanelH + 5), num(y0_ + kPanelH + 17),
          fmt::format("{:g}", xt));
    }
    for (double yt : yticks()) {
      out += fmt::format(
          "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#ddd\"/>"
          "<text x=\"{3}\" y=\"{4}\" text-anchor=\"end\" font-size=\"10\">{5}</text>\n",
          num(x0_), num(py(yt)), num(x0_ + kPanelW), num(x0_ - 4), num(py(yt) + 3),
          fmt::format("{:.4g}", yt));
    }
  }

  std::string polyline(const std::vector<std::pair<double, double>>& pts) const {
    std::string s;
    for (const auto& [x, y] : pts) {
      if (!s.empty()) s.push_back(' ');
      s += num(px(x)) + "," + num(py(y));
    }
    return s;
  }

  bool contains_y(double v) const { return v >= y_.lo && v <= y_.hi; }

 private:
  std::vector<double> yticks() const {
    std::vector<double> ticks;
    if (y_.log) {
      for (double v = y_.lo; v <= y_.hi * 1.0000001; v *= 10.0) ticks.push_back(v);
    } else {
      for (int i = 0; i <= 5; ++i) ticks.push_back(y_.lo + (y_.hi - y_.lo) * i / 5.0);
    }
    return ticks;
  }

  double x0_, y0_;
  Axis x_, y_;
};

using Series = std::vector<std::pair<double, double>>;

Series collect(std::span<const BlockSummary> rows, const SummaryStat BlockSummary::*field) {
  Series s;
  for (const auto& r : rows) {
    const auto& stat = r.*field;
    if (stat.mean && std::isfinite(*stat.mean)) s.emplace_back(r.block_size, *stat.mean);
  }
  return s;
}

void legend(std::string& out, double x, double y, std::string_view color, std::string_view dash,
            std::string_view label) {
  out += fmt::format(
      "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"2\"{}/>"
      "<text x=\"{}\" y=\"{}\" font-size=\"11\">{}</text>\n",
      num(x), num(y), num(x + 24), num(y), color,
      dash.empty() ? std::string() : fmt::format(" stroke-dasharray=\"{}\"", dash), num(x + 30),
      num(y + 4), escape(label));
}

}  // namespace

std::string svg_file_stem(std::string_view distribution) {
  std::string out;
  for (char c : distribution) {
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') {
      out.push_back(c);
    } else if (!out.empty() && out.back() != '_') {
      out.push_back('_');
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "distribution" : out;
}

std::string render_distribution_svg(std::string_view distribution,
                                    std::span<const BlockSummary> input) {
  if (input.empty()) throw ValidationError("nothing to plot");
  std::vector<BlockSummary> rows(input.begin(), input.end());
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.block_size < b.block_size; });

  const Series lb = collect(rows, &BlockSummary::ratio_lb);
  const Series ub = collect(rows, &BlockSummary::ratio_ub);
  const Series bound = collect(rows, &BlockSummary::bound_ratio);
  const Series gap = collect(rows, &BlockSummary::gap_lower);

  std::vector<double> xs;
  for (const auto& r : rows) xs.push_back(r.block_size);
  Axis xaxis = make_axis(xs, true);
  if (!xaxis.log) {
    xaxis.log = xs.front() > 0.0;
    if (xaxis.log) {
      xaxis.lo = xs.front() / 1.25;
      xaxis.hi = xs.back() * 1.25;
      if (xaxis.hi <= xaxis.lo) xaxis.hi = xaxis.lo * 2.0;
    }
  }

  std::vector<double> ratio_vals{1.0};
  for (const auto* s : {&lb, &ub, &bound}) {
    for (const auto& p : *s) {
      if (p.second > 0.0) ratio_vals.push_back(p.second);
    }
  }
  const Axis ratio_axis = make_axis(ratio_vals, true);
  std::vector<double> gap_vals{0.0};
  for (const auto& p : gap) gap_vals.push_back(p.second);
  const Axis gap_axis = make_axis(gap_vals, false);

  const Panel left(kMarginL, kMarginT, xaxis, ratio_axis);
  const Panel right(kMarginL + kPanelW + kGutter, kMarginT, xaxis, gap_axis);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\">\n",
      num(kWidth), num(kHeight));
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += fmt::format(
      "<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
      num(kWidth / 2), escape(fmt::format("Optimal vs FIFO block utility: {}", distribution)));

  left.frame(out, "utility ratio vs FIFO", "ratio", xs);
  right.frame(out, "analytic gap lower bound", "gap_lower (L - U)", xs);

  // Band between the greedy and relaxation ratios brackets p*/p_fifo.
  if (!lb.empty() && lb.size() == ub.size()) {
    Series band = lb;
    band.insert(band.end(), ub.rbegin(), ub.rend());
    out += fmt::format("<polygon points=\"{}\" fill=\"#1f77b4\" fill-opacity=\"0.2\" stroke=\"none\"/>\n",
                       left.polyline(band));
  }
  if (left.contains_y(1.0)) {
    out += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n",
        num(kMarginL), num(left.py(1.0)), num(kMarginL + kPanelW));
  }
  auto line = [&](const Panel& p, const Series& s, std::string_view color, std::string_view dash) {
    if (s.empty()) return;
    out += fmt::format("<polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"{}/>\n",
                       p.polyline(s), color,
                       dash.empty() ? std::string() : fmt::format(" stroke-dasharray=\"{}\"", dash));
    for (const auto& [x, y] : s) {
      out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"{}\"/>\n", num(p.px(x)),
                         num(p.py(y)), color);
    }
  };
  line(left, lb, "#1f77b4", "");
  line(left, ub, "#2ca02c", "");
  line(left, bound, "#d62728", "6,4");
  if (right.contains_y(0.0)) {
    const double x0 = kMarginL + kPanelW + kGutter;
    out += fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>\n",
        num(x0), num(right.py(0.0)), num(x0 + kPanelW));
  }
  line(right, gap, "#9467bd", "");

  const double ly = kMarginT + kPanelH + 55;
  legend(out, kMarginL, ly, "#1f77b4", "", "mean p0/p_fifo");
  legend(out, kMarginL + 140, ly, "#2ca02c", "", "mean r*/p_fifo");
  legend(out, kMarginL + 280, ly, "#d62728", "6,4", "mean L/U bound");
  legend(out, kMarginL + kPanelW + kGutter, ly, "#9467bd", "", "mean L - U");
  out += "</svg>\n";
  return out;
}

}  // namespace fifogap
