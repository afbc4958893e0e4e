// Copyright (c) 2026 the bestchoice authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace bestchoice {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bestchoice
