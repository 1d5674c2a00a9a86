// Copyright 2026 The djc Authors
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

#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "djc/errors.hpp"
#include "djc/presets_data.hpp"

namespace djc {

inline constexpr std::array<std::string_view, 7> kFigureNames{"fig2", "fig3", "fig4", "fig5",
                                                              "fig6", "fig7", "fig8"};

struct PresetFile {
  std::string_view name;  // file stem, e.g. "fig4_zeno"
  std::string_view text;
};

/// Config files that together produce the data for `figure`: "figN" itself
/// plus any "figN_*" companions (e.g. the Zeno curve).
inline std::vector<PresetFile> preset_files(std::string_view figure) {
  if (std::find(kFigureNames.begin(), kFigureNames.end(), figure) == kFigureNames.end())
    throw ConfigError("unknown figure '" + std::string(figure) + "' (expected fig2 .. fig8)");
  std::vector<PresetFile> out;
  for (const auto& [name, text] : presets_data::kFiles)
    if (name == figure || (name.size() > figure.size() && name.starts_with(figure) && name[figure.size()] == '_'))
      out.push_back({name, text});
  return out;
}

}  // namespace djc
