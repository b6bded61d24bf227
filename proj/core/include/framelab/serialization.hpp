// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON round-tripping for frames, block decompositions, and estimates,
// plus the CSV emitted for reconstruction traces. Key order and number
// formatting are fixed so equal inputs serialize to equal bytes.

#ifndef FRAMELAB_SERIALIZATION_HPP
#define FRAMELAB_SERIALIZATION_HPP

#include <string>

#include "framelab/besselian.hpp"
#include "framelab/fdd.hpp"
#include "framelab/frame.hpp"

namespace framelab {

// {"space": {"kind": ..., ["p": ...,] "dim": ...},
//  "label": ..., "pairs": [{"a": [...], "b": [...]}, ...]}
std::string frame_to_json(const Frame& f, int indent = 2);
Frame frame_from_json(const std::string& text);

// File variants wrap parse failures in std::runtime_error naming the path.
Frame load_frame_file(const std::string& path);
void save_frame_file(const Frame& f, const std::string& path);

// {"space": {...}, "blocks": [{"basis": [[...]], "dual": [[...]],
//  "projection": [[...]]}, ...]}. The label is not serialized; loading
// from a file stamps the file stem, loading from text leaves it empty.
std::string fdd_to_json(const FddSpec& fdd, int indent = 2);
FddSpec fdd_from_json(const std::string& text);
FddSpec load_fdd_file(const std::string& path);
void save_fdd_file(const FddSpec& fdd, const std::string& path);

// Coordinates as a bare JSON array, length checked against the space.
Vector vector_from_json(const std::string& text, const SpaceSpec& space);
Vector load_vector_file(const std::string& path, const SpaceSpec& space);

// {"value": ..., "method": ..., "iterations": ..., "converged": ...,
//  "worst_regression": ..., "witness_x": [...], "witness_y": [...]}
std::string estimate_to_json(const BesselianEstimate& e, int indent = 2);

// Header "k,error", one row per partial sum (k = 0 is the empty sum).
std::string reconstruction_csv(const ReconstructionTrace& trace);

}  // namespace framelab

#endif  // FRAMELAB_SERIALIZATION_HPP
