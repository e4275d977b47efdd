#include "compgap/plot.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "compgap/error.h"
#include "compgap/format.h"

namespace compgap {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 620.0;
constexpr double kTop = 60.0;
constexpr double kBottom = 530.0;
constexpr int kTicks = 4;

constexpr std::array<const char*, 8> kPalette = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                                 "#66a61e", "#e6ab02", "#a6761d", "#666666"};

const char* color_for(std::size_t cluster) {
  if (cluster == 0) return "#999999";
  return kPalette[(cluster - 1) % kPalette.size()];
}

std::string escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

std::string num(double v) { return fmt::format("{:.2f}", v); }

}  // namespace

std::string render_qs_plot(std::span<const PlotPoint> points, std::string_view title) {
  if (points.empty()) throw Error(ErrorCode::EmptyPointSet, "nothing to plot");

  // Common extent for both axes so the diagonal sits at 45 degrees in data space.
  double extent = 0.0;
  for (const auto& p : points) extent = std::max({extent, std::abs(p.point.soq), std::abs(p.point.suq)});
  extent = extent > 0.0 ? extent * 1.1 : 1.0;

  auto sx = [&](double soq) { return kLeft + (soq / extent) * (kRight - kLeft); };
  auto sy = [&](double suq) { return kTop + (-suq / extent) * (kBottom - kTop); };

  std::string svg = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      kWidth, kHeight);
  svg += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", kWidth, kHeight);
  svg += fmt::format("<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
                     (kLeft + kRight) / 2, escape(title));

  svg += "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double v = extent * i / kTicks;
    svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", num(sx(v)), num(kTop), num(kBottom));
    svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n", num(kLeft), num(sy(-v)), num(kRight));
  }
  svg += "</g>\n";

  svg += "<g stroke=\"#000000\" stroke-width=\"1.5\">\n";
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n", num(kLeft), num(kTop), num(kRight));
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", num(kLeft), num(kTop), num(kBottom));
  svg += "</g>\n";
  svg += fmt::format(
      "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#888888\" stroke-width=\"1\" "
      "stroke-dasharray=\"6 4\"/>\n",
      num(sx(0)), num(sy(0)), num(sx(extent)), num(sy(-extent)));

  svg += "<g fill=\"#333333\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double v = extent * i / kTicks;
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", num(sx(v)), num(kTop - 8),
                       format_fixed(v, 2));
    svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", num(kLeft - 6), num(sy(-v) + 4),
                       format_fixed(-v, 2));
  }
  svg += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">SOQ</text>\n", num((kLeft + kRight) / 2),
                     num(kTop - 26));
  svg += fmt::format("<text x=\"20\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0})\">SUQ</text>\n",
                     num((kTop + kBottom) / 2));
  svg += "</g>\n";

  svg += "<g stroke=\"#000000\" stroke-width=\"0.5\">\n";
  for (const auto& p : points) {
    svg += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"5\" fill=\"{}\"><title>{} MSG {}</title></circle>\n",
                       num(sx(p.point.soq)), num(sy(p.point.suq)), color_for(p.cluster), escape(p.point.candidate),
                       format_fixed(p.point.msg, 2));
  }
  svg += "</g>\n<g fill=\"#000000\" font-size=\"10\">\n";
  for (const auto& p : points) {
    svg += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", num(sx(p.point.soq) + 7), num(sy(p.point.suq) - 4),
                       escape(p.point.candidate));
  }
  svg += "</g>\n";

  std::set<std::size_t> clusters;
  for (const auto& p : points) clusters.insert(p.cluster);
  svg += "<g font-size=\"12\">\n";
  double y = kTop + 10;
  for (std::size_t c : clusters) {
    svg += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"12\" height=\"12\" fill=\"{}\"/>\n", num(kRight + 30),
                       num(y), color_for(c));
    const std::string label = c == 0 ? "unclustered" : fmt::format("cluster {}", c);
    svg += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", num(kRight + 48), num(y + 10), label);
    y += 20;
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

std::string render_qs_plot_from_result(std::string_view result_json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(result_json);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("result document: ") + e.what());
  }
  std::vector<PlotPoint> points;
  try {
    for (const auto& p : doc.at("qs_points")) {
      PlotPoint pp;
      pp.point.candidate = p.at("candidate").get<std::string>();
      pp.point.soq = p.at("soq").get<double>();
      pp.point.suq = p.at("suq").get<double>();
      pp.point.msg = p.at("msg").get<double>();
      pp.point.mag = p.at("mag").get<double>();
      pp.cluster = p.value("cluster", std::size_t{0});
      points.push_back(std::move(pp));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("result document: ") + e.what());
  }
  return render_qs_plot(points);
}

}  // namespace compgap
