// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef FRAMELAB_FORMAT_HPP
#define FRAMELAB_FORMAT_HPP

#include <string>

namespace framelab {

// Shortest decimal string that round-trips to the same double ("2", "0.5",
// "1e-10"). Locale-independent; used for CSV cells and id grammar text.
std::string format_double(double x);

}  // namespace framelab

#endif  // FRAMELAB_FORMAT_HPP
