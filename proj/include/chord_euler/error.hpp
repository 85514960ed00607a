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

#include <stdexcept>
#include <string>
#include <vector>

namespace chord_euler {

enum class ErrorKind {
  InvalidArgument,
  DivisionByZero,
  Parse,
  TooFewVertices,
  DuplicateVertex,
  CollinearTriple,
  SelfIntersection,
  OnBoundary,
  NotDiagonal,
  Crossing,
  Precondition,
  TooLarge,
  Generator,
  Internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what, std::vector<int> indices = {})
      : std::runtime_error(what), kind_(kind), indices_(std::move(indices)) {}

  ErrorKind kind() const { return kind_; }
  // Offending vertex/edge indices, in input order, when the error names them.
  const std::vector<int>& indices() const { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<int> indices_;
};

}  // namespace chord_euler
