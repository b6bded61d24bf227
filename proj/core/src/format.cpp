// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace framelab {

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (res.ec != std::errc())
    throw std::runtime_error("double formatting failed");
  return std::string(buf.data(), res.ptr);
}

}  // namespace framelab
