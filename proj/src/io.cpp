/*
 * Copyright 2026 The chord-euler Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "chord_euler/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "chord_euler/error.hpp"

namespace chord_euler {

using ojson = nlohmann::ordered_json;

namespace {

ojson parse_document(std::string_view text) {
  try {
    return ojson::parse(text.begin(), text.end());
  } catch (const ojson::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

const std::string& string_field(const ojson& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) throw Error(ErrorKind::Parse, where + ": missing string field '" + key + "'");
  return it->get_ref<const std::string&>();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
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

}  // namespace

std::string polygon_to_json(const std::vector<Point>& vertices) {
  ojson doc;
  doc["vertices"] = ojson::array();
  for (const Point& p : vertices) doc["vertices"].push_back({{"x", p.x.to_string()}, {"y", p.y.to_string()}});
  return doc.dump(2) + "\n";
}

std::string polygon_to_json(const Polygon& P) { return polygon_to_json(P.vertices()); }

std::vector<Point> parse_polygon_json(std::string_view text) {
  ojson doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorKind::Parse, "polygon file needs a \"vertices\" array");
  std::vector<Point> out;
  std::size_t k = 0;
  for (const ojson& v : doc["vertices"]) {
    const std::string where = "vertex " + std::to_string(k++);
    if (!v.is_object()) throw Error(ErrorKind::Parse, where + ": expected an object");
    out.push_back({QSqrt3::parse(string_field(v, "x", where)), QSqrt3::parse(string_field(v, "y", where))});
  }
  return out;
}

Polygon parse_polygon(std::string_view text) { return validate_polygon(parse_polygon_json(text)); }

std::string chord_file_to_json(const ChordFile& f) {
  ojson doc;
  doc["chords"] = ojson::array();
  for (const Chord& c : f.chords) doc["chords"].push_back(to_string(c));
  if (!f.labels.empty()) {
    doc["labels"] = ojson::object();
    for (const auto& [name, c] : f.labels) doc["labels"][name] = to_string(c);
  }
  return doc.dump(2) + "\n";
}

ChordFile parse_chord_file(std::string_view text, int n) {
  ojson doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("chords") || !doc["chords"].is_array())
    throw Error(ErrorKind::Parse, "chord file needs a \"chords\" array");
  ChordFile f;
  for (const ojson& c : doc["chords"]) {
    if (!c.is_string()) throw Error(ErrorKind::Parse, "chords must be \"i-j\" strings");
    f.chords.push_back(parse_chord(c.get_ref<const std::string&>(), n));
  }
  if (doc.contains("labels")) {
    if (!doc["labels"].is_object()) throw Error(ErrorKind::Parse, "\"labels\" must be an object");
    for (const auto& [name, c] : doc["labels"].items()) {
      if (!c.is_string()) throw Error(ErrorKind::Parse, "label " + name + " must be an \"i-j\" string");
      f.labels.emplace_back(name, parse_chord(c.get_ref<const std::string&>(), n));
    }
  }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string render_svg(const Polygon& P, const ChordFile& chords) {
  const int n = P.size();
  std::vector<double> xs, ys;
  for (const Point& p : P.vertices()) {
    xs.push_back(p.x.to_double());
    ys.push_back(p.y.to_double());
  }
  const double x0 = *std::min_element(xs.begin(), xs.end()), x1 = *std::max_element(xs.begin(), xs.end());
  const double y0 = *std::min_element(ys.begin(), ys.end()), y1 = *std::max_element(ys.begin(), ys.end());
  const double size = 480, margin = 30;
  const double span = std::max(x1 - x0, y1 - y0);
  const double s = span > 0 ? size / span : 1;
  auto X = [&](int k) { return fmt(margin + (xs[static_cast<std::size_t>(k)] - x0) * s); };
  // SVG y grows downward.
  auto Y = [&](int k) { return fmt(margin + (y1 - ys[static_cast<std::size_t>(k)]) * s); };
  const std::string W = fmt((x1 - x0) * s + 2 * margin), H = fmt((y1 - y0) * s + 2 * margin);

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
    << " " << H << "\">\n";
  o << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "  <polygon class=\"boundary\" fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (int k = 0; k < n; ++k) o << (k ? " " : "") << X(k) << "," << Y(k);
  o << "\"/>\n";
  for (const Chord& c : chords.chords) {
    ChordKind kind = classify_chord(P, c);
    const char* dash = kind == ChordKind::Diagonal ? "8,5" : kind == ChordKind::Epigonal ? "2,4" : "8,3,2,3";
    const char* color = kind == ChordKind::Diagonal ? "#1f4e9c" : kind == ChordKind::Epigonal ? "#b03a2e" : "#6c3483";
    o << "  <line class=\"" << to_string(kind) << "\" x1=\"" << X(c.i) << "\" y1=\"" << Y(c.i) << "\" x2=\"" << X(c.j)
      << "\" y2=\"" << Y(c.j) << "\" stroke=\"" << color << "\" stroke-width=\"1.5\" stroke-dasharray=\"" << dash
      << "\"/>\n";
  }
  for (const auto& [name, c] : chords.labels) {
    const double mx = margin + ((xs[static_cast<std::size_t>(c.i)] + xs[static_cast<std::size_t>(c.j)]) / 2 - x0) * s;
    const double my = margin + (y1 - (ys[static_cast<std::size_t>(c.i)] + ys[static_cast<std::size_t>(c.j)]) / 2) * s;
    o << "  <text class=\"chord-label\" x=\"" << fmt(mx) << "\" y=\"" << fmt(my)
      << "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\">" << xml_escape(name) << "</text>\n";
  }
  for (int k = 0; k < n; ++k) {
    o << "  <circle cx=\"" << X(k) << "\" cy=\"" << Y(k) << "\" r=\"3\" fill=\""
      << (P.is_reflex(k) ? "#c0392b" : "black") << "\"/>\n";
    o << "  <text class=\"vertex-label\" x=\"" << X(k) << "\" y=\"" << Y(k)
      << "\" dx=\"5\" dy=\"-5\" font-family=\"sans-serif\" font-size=\"12\">" << k << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace chord_euler
