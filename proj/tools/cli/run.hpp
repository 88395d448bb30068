// SPDX-License-Identifier: Apache-2.0
//
// beamnet: beampattern statistics of random collaborative sensor arrays
// Copyright (C) 2026 The beamnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include <iosfwd>

namespace beamnet::cli
{

// Entry point of the beamnet tool. Results go to `out` unless the experiment
// names an output file; error records go to `err` as one JSON line.
// Exit codes: 0 success, 2 usage or domain error, 3 numeric failure.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace beamnet::cli
