// Copyright 2026 The dprs Authors
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

// JSON interchange for Instance:
//   {"m": 2, "c": [...], "parties": [{"n_k", "A_k", "B_k", "b_k", "u_k",
//    "s_bar_k", "meta"?}]}
// Matrices are nested row arrays. A missing s_bar_k defaults to c.

#ifndef DPRS_INSTANCE_IO_H_
#define DPRS_INSTANCE_IO_H_

#include <filesystem>
#include <string>

#include "dprs/model.h"

namespace dprs {

std::string InstanceToJson(const Instance& inst);
Instance InstanceFromJson(const std::string& text);

void WriteInstanceFile(const std::filesystem::path& path, const Instance& inst);
Instance ReadInstanceFile(const std::filesystem::path& path);

}  // namespace dprs

#endif  // DPRS_INSTANCE_IO_H_
