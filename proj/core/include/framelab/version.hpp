// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_VERSION_HPP
#define FRAMELAB_VERSION_HPP

namespace framelab {

inline constexpr const char* kToolName = "frame-lab";
inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace framelab

#endif  // FRAMELAB_VERSION_HPP
