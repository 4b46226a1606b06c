// Copyright 2026 The qnlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "qnlp/pregroup/serialize.hpp"

namespace qnlp {
namespace {

constexpr double kMargin = 30.0;
constexpr double kSpacing = 50.0;
constexpr double kRow = 70.0;
constexpr double kBoxHalfHeight = 14.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", x);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string type_label(const PType& t, double x, double y) {
  std::string adj;
  for (int i = 0; i < std::abs(t.z); ++i) adj += t.z < 0 ? 'l' : 'r';
  std::string out = "<text class=\"type\" x=\"" + num(x + 4) + "\" y=\"" + num(y) +
                    "\" font-size=\"11\">" + escape(t.base.name());
  if (!adj.empty()) {
    out += "<tspan baseline-shift=\"super\" font-size=\"8\">" + adj + "</tspan>";
  }
  return out + "</text>\n";
}

std::string line(double x1, double y1, double x2, double y2) {
  return "<line class=\"wire\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
         num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"black\"/>\n";
}

class Layout {
 public:
  explicit Layout(const Diagram& d) {
    for (std::size_t k = 0; k <= d.size(); ++k) widths_.push_back(d.wires_before(k).size());
    max_width_ = std::max<std::size_t>(1, *std::max_element(widths_.begin(), widths_.end()));
  }

  // Horizontal position of wire j at slice k; position j may equal the
  // wire count, which is where a zero-width box would be inserted.
  double x(std::size_t k, double j) const {
    const double pad = (static_cast<double>(max_width_) - static_cast<double>(widths_[k])) / 2.0;
    return kMargin + (j + pad) * kSpacing;
  }
  static double y(std::size_t k) { return kMargin + static_cast<double>(k) * kRow; }

  double width() const { return 2 * kMargin + static_cast<double>(max_width_) * kSpacing; }

 private:
  std::vector<std::size_t> widths_;
  std::size_t max_width_ = 1;
};

}  // namespace

std::string render_svg(const Diagram& d) {
  const Layout layout(d);
  const std::size_t rows = std::max<std::size_t>(d.size(), 1);
  const double height = 2 * kMargin + static_cast<double>(rows) * kRow;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(layout.width())
      << "\" height=\"" << num(height) << "\">\n";

  if (d.size() == 0) {
    for (std::size_t j = 0; j < d.dom().size(); ++j) {
      const double x = layout.x(0, static_cast<double>(j));
      svg << line(x, Layout::y(0), x, Layout::y(1));
      svg << type_label(d.dom()[j], x, Layout::y(1));
    }
    svg << "</svg>\n";
    return svg.str();
  }

  for (std::size_t k = 0; k < d.size(); ++k) {
    const Layer& layer = d.layers()[k];
    const TypeSeq wires = d.wires_before(k);
    const std::size_t in = box_dom(layer.box).size();
    const std::size_t out = box_cod(layer.box).size();
    const double y0 = Layout::y(k);
    const double y1 = Layout::y(k + 1);
    const double ymid = (y0 + y1) / 2.0;

    for (std::size_t j = 0; j < wires.size(); ++j) {
      if (j >= layer.offset && j < layer.offset + in) continue;
      const std::size_t below = j < layer.offset ? j : j - in + out;
      svg << line(layout.x(k, double(j)), y0, layout.x(k + 1, double(below)), y1);
    }

    std::vector<double> xs_in, xs_out;
    for (std::size_t j = 0; j < in; ++j) xs_in.push_back(layout.x(k, double(layer.offset + j)));
    for (std::size_t j = 0; j < out; ++j) xs_out.push_back(layout.x(k + 1, double(layer.offset + j)));
    const TypeSeq cod = box_cod(layer.box);

    if (const auto* w = std::get_if<Word>(&layer.box)) {
      std::vector<double> all = xs_in;
      all.insert(all.end(), xs_out.begin(), xs_out.end());
      double lo, hi;
      if (all.empty()) {
        lo = hi = (layout.x(k, double(layer.offset)) + layout.x(k + 1, double(layer.offset))) / 2.0;
      } else {
        lo = *std::min_element(all.begin(), all.end());
        hi = *std::max_element(all.begin(), all.end());
      }
      const double left = lo - 18.0;
      const double right = hi + 18.0;
      svg << "<rect class=\"box\" x=\"" << num(left) << "\" y=\"" << num(ymid - kBoxHalfHeight)
          << "\" width=\"" << num(right - left) << "\" height=\"" << num(2 * kBoxHalfHeight)
          << "\" fill=\"white\" stroke=\"black\"/>\n";
      svg << "<text class=\"token\" x=\"" << num((left + right) / 2.0) << "\" y=\""
          << num(ymid + 4) << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(w->token)
          << "</text>\n";
      for (double x : xs_in) svg << line(x, y0, x, ymid - kBoxHalfHeight);
      for (std::size_t j = 0; j < out; ++j) {
        svg << line(xs_out[j], ymid + kBoxHalfHeight, xs_out[j], y1);
        svg << type_label(cod[j], xs_out[j], ymid + kBoxHalfHeight + 14);
      }
    } else if (std::holds_alternative<Cup>(layer.box)) {
      svg << "<path class=\"arc\" d=\"M " << num(xs_in[0]) << " " << num(y0) << " C "
          << num(xs_in[0]) << " " << num(ymid + 10) << ", " << num(xs_in[1]) << " "
          << num(ymid + 10) << ", " << num(xs_in[1]) << " " << num(y0)
          << "\" fill=\"none\" stroke=\"black\"/>\n";
    } else if (std::holds_alternative<Cap>(layer.box)) {
      svg << "<path class=\"arc\" d=\"M " << num(xs_out[0]) << " " << num(y1) << " C "
          << num(xs_out[0]) << " " << num(ymid - 10) << ", " << num(xs_out[1]) << " "
          << num(ymid - 10) << ", " << num(xs_out[1]) << " " << num(y1)
          << "\" fill=\"none\" stroke=\"black\"/>\n";
      for (std::size_t j = 0; j < out; ++j) svg << type_label(cod[j], xs_out[j], y1 - 4);
    } else if (std::holds_alternative<Spider>(layer.box)) {
      std::vector<double> all = xs_in;
      all.insert(all.end(), xs_out.begin(), xs_out.end());
      const double cx = all.empty() ? layout.x(k, double(layer.offset))
                                    : (*std::min_element(all.begin(), all.end()) +
                                       *std::max_element(all.begin(), all.end())) / 2.0;
      for (double x : xs_in) svg << line(x, y0, cx, ymid);
      for (double x : xs_out) svg << line(cx, ymid, x, y1);
      svg << "<circle class=\"spider\" cx=\"" << num(cx) << "\" cy=\"" << num(ymid)
          << "\" r=\"5\" fill=\"black\"/>\n";
      for (std::size_t j = 0; j < out; ++j) svg << type_label(cod[j], xs_out[j], y1 - 4);
    } else {
      svg << line(xs_in[0], y0, xs_out[1], y1);
      svg << line(xs_in[1], y0, xs_out[0], y1);
    }
  }

  const std::size_t last = d.size();
  for (std::size_t j = 0; j < d.cod().size(); ++j) {
    svg << type_label(d.cod()[j], layout.x(last, double(j)), Layout::y(last) + 14);
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace qnlp
