// Copyright 2026 The gsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GSV_VERSION_H
#define GSV_VERSION_H

namespace gsv {

/// Stamped on every cache record. Bump whenever the SLD kernel changes so stale
/// records are recomputed instead of trusted.
inline constexpr const char kEngineVersion[] = "gsv-sld-1";

}  // namespace gsv

#endif
