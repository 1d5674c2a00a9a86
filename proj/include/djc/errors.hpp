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

#include <stdexcept>
#include <string>

namespace djc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define DJC_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

DJC_DEFINE_ERROR(DimensionMismatch);
DJC_DEFINE_ERROR(NotHermitian);
DJC_DEFINE_ERROR(NotPSD);
DJC_DEFINE_ERROR(BadSubsystem);
DJC_DEFINE_ERROR(TruncationTooSmall);
DJC_DEFINE_ERROR(InvalidParams);
DJC_DEFINE_ERROR(LayoutMismatch);
DJC_DEFINE_ERROR(ZeroNorm);
DJC_DEFINE_ERROR(NotDensityMatrix);
DJC_DEFINE_ERROR(NotXForm);
DJC_DEFINE_ERROR(ConfigError);
DJC_DEFINE_ERROR(IoError);

#undef DJC_DEFINE_ERROR

}  // namespace djc
