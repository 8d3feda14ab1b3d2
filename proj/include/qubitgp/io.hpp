// Copyright 2026 the qubitgp authors
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

// io.hpp — Deterministic text output. All floats are written with
// shortest-round-trip formatting ('.' decimal separator, locale-free), lines
// end with '\n', so reruns produce byte-identical files.

#pragma once

#include <iosfwd>
#include <string>

namespace qgp {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);

} // namespace qgp
