// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/serialization.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "framelab/format.hpp"
#include "json.hpp"

namespace framelab {

namespace {

using ordered_json = nlohmann::ordered_json;

SpaceKind kind_from_text(const std::string& text) {
  if (text == "lp") return SpaceKind::lp;
  if (text == "c0") return SpaceKind::c0;
  if (text == "linf") return SpaceKind::linf;
  throw std::runtime_error("unknown space kind: '" + text + "'");
}

ordered_json space_to_json(const SpaceSpec& s) {
  ordered_json j;
  j["kind"] = to_string(s.kind);
  if (s.kind == SpaceKind::lp) j["p"] = s.p;
  j["dim"] = s.dim;
  return j;
}

SpaceSpec space_from_json(const ordered_json& j) {
  SpaceSpec s;
  s.kind = kind_from_text(j.at("kind").get<std::string>());
  if (s.kind == SpaceKind::lp) {
    s.p = j.at("p").get<double>();
    if (!(s.p >= 1.0)) throw std::runtime_error("lp exponent must be >= 1");
  }
  s.dim = j.at("dim").get<int>();
  if (s.dim < 1) throw std::runtime_error("space dimension must be positive");
  return s;
}

std::vector<double> coords_from_json(const ordered_json& j,
                                     const std::string& what) {
  if (!j.is_array()) throw std::runtime_error(what + " must be a JSON array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_number())
      throw std::runtime_error(what + " entries must be numbers");
    out.push_back(entry.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> rows_from_json(const ordered_json& j,
                                                const std::string& what) {
  if (!j.is_array()) throw std::runtime_error(what + " must be a JSON array");
  std::vector<std::vector<double>> out;
  out.reserve(j.size());
  for (const auto& row : j) out.push_back(coords_from_json(row, what + " row"));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("short write to '" + path + "'");
}

ordered_json parse_text(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw std::runtime_error(what + ": " + e.what());
  }
}

}  // namespace

std::string frame_to_json(const Frame& f, int indent) {
  ordered_json j;
  j["space"] = space_to_json(f.space);
  j["label"] = f.label;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : f.pairs) {
    ordered_json jp;
    jp["a"] = p.a;
    jp["b"] = p.b;
    pairs.push_back(std::move(jp));
  }
  j["pairs"] = std::move(pairs);
  return j.dump(indent);
}

Frame frame_from_json(const std::string& text) {
  const ordered_json j = parse_text(text, "frame JSON");
  Frame f;
  try {
    f.space = space_from_json(j.at("space"));
    f.label = j.value("label", std::string{});
    for (const auto& jp : j.at("pairs")) {
      FramePair p;
      p.a = coords_from_json(jp.at("a"), "pair vector");
      p.b = coords_from_json(jp.at("b"), "pair functional");
      f.pairs.push_back(std::move(p));
    }
  } catch (const ordered_json::exception& e) {
    throw std::runtime_error(std::string{"frame JSON: "} + e.what());
  }
  validate_frame_shape(f);
  return f;
}

Frame load_frame_file(const std::string& path) {
  try {
    return frame_from_json(read_file(path));
  } catch (const std::exception& e) {
    throw std::runtime_error("loading frame '" + path + "': " + e.what());
  }
}

void save_frame_file(const Frame& f, const std::string& path) {
  write_file(path, frame_to_json(f) + "\n");
}

std::string fdd_to_json(const FddSpec& fdd, int indent) {
  ordered_json j;
  j["space"] = space_to_json(fdd.space);
  ordered_json blocks = ordered_json::array();
  for (const auto& block : fdd.blocks) {
    ordered_json jb;
    jb["basis"] = block.basis;
    jb["dual"] = block.dual;
    jb["projection"] = block.projection;
    blocks.push_back(std::move(jb));
  }
  j["blocks"] = std::move(blocks);
  return j.dump(indent);
}

FddSpec fdd_from_json(const std::string& text) {
  const ordered_json j = parse_text(text, "decomposition JSON");
  FddSpec fdd;
  try {
    fdd.space = space_from_json(j.at("space"));
    for (const auto& jb : j.at("blocks")) {
      FddBlock block;
      block.basis = rows_from_json(jb.at("basis"), "block basis");
      block.dual = rows_from_json(jb.at("dual"), "block dual");
      block.projection = rows_from_json(jb.at("projection"), "block projection");
      fdd.blocks.push_back(std::move(block));
    }
  } catch (const ordered_json::exception& e) {
    throw std::runtime_error(std::string{"decomposition JSON: "} + e.what());
  }
  annotate_blocks(fdd);
  validate_fdd(fdd);
  return fdd;
}

FddSpec load_fdd_file(const std::string& path) {
  try {
    FddSpec fdd = fdd_from_json(read_file(path));
    fdd.label = std::filesystem::path(path).stem().string();
    return fdd;
  } catch (const std::exception& e) {
    throw std::runtime_error("loading decomposition '" + path + "': " + e.what());
  }
}

void save_fdd_file(const FddSpec& fdd, const std::string& path) {
  write_file(path, fdd_to_json(fdd) + "\n");
}

Vector vector_from_json(const std::string& text, const SpaceSpec& space) {
  const ordered_json j = parse_text(text, "vector JSON");
  Vector v;
  v.space = space;
  v.coords = coords_from_json(j, "vector");
  if (v.dim() != space.dim)
    throw std::runtime_error("vector has " + std::to_string(v.dim()) +
                             " coordinates, space needs " +
                             std::to_string(space.dim));
  return v;
}

Vector load_vector_file(const std::string& path, const SpaceSpec& space) {
  try {
    return vector_from_json(read_file(path), space);
  } catch (const std::exception& e) {
    throw std::runtime_error("loading vector '" + path + "': " + e.what());
  }
}

std::string estimate_to_json(const BesselianEstimate& e, int indent) {
  ordered_json j;
  j["value"] = e.value;
  j["method"] = to_string(e.method);
  j["iterations"] = e.iterations;
  j["converged"] = e.converged;
  j["worst_regression"] = e.worst_regression;
  j["witness_x"] = e.witness_x.coords;
  j["witness_y"] = e.witness_y.coords;
  return j.dump(indent);
}

std::string reconstruction_csv(const ReconstructionTrace& trace) {
  std::string out = "k,error\n";
  for (std::size_t k = 0; k < trace.errors.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += format_double(trace.errors[k]);
    out += '\n';
  }
  return out;
}

}  // namespace framelab
