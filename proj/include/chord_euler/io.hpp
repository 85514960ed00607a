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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chord_euler/chords.hpp"
#include "chord_euler/geometry.hpp"

namespace chord_euler {

// {"vertices": [{"x": "...", "y": "..."}, ...]}; scalars in QSqrt3 text form.
std::string polygon_to_json(const std::vector<Point>& vertices);
std::string polygon_to_json(const Polygon& P);
std::vector<Point> parse_polygon_json(std::string_view text);
Polygon parse_polygon(std::string_view text);

// {"chords": ["i-j", ...], "labels": {"e1": "i-j", ...}}; labels optional.
struct ChordFile {
  std::vector<Chord> chords;
  std::vector<std::pair<std::string, Chord>> labels;
};

std::string chord_file_to_json(const ChordFile& f);
ChordFile parse_chord_file(std::string_view text, int n);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

// Boundary solid, diagonals dashed, epigonals dotted, boundary-crossing
// chords dash-dot. Floats only for drawing; fixed formatting.
std::string render_svg(const Polygon& P, const ChordFile& chords = {});

}  // namespace chord_euler
