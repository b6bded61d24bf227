// Copyright (c) 2026 the frame-lab authors.
// SPDX-License-Identifier: Apache-2.0

#include "framelab/corpus.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "framelab/format.hpp"
#include "framelab/rng.hpp"

namespace framelab {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer for " + what + ": '" + text + "'");
  }
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad number for " + what + ": '" + text + "'");
  }
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer for " + what + ": '" + text + "'");
  }
}

}  // namespace

Frame canonical_basis_frame(const SpaceSpec& space) {
  Frame f;
  f.space = space;
  f.label = "canonical:" + space_id_text(space);
  f.pairs.reserve(static_cast<std::size_t>(space.dim));
  for (int n = 1; n <= space.dim; ++n) {
    const auto e = unit_vector(space, n);
    f.pairs.push_back(FramePair{e.coords, e.coords});
  }
  return f;
}

Frame halved_doubled_frame(int dim) {
  require(dim >= 1, "dimension must be positive");
  const SpaceSpec space = SpaceSpec::C0(dim);
  Frame f;
  f.space = space;
  f.label = "halved_doubled:" + std::to_string(dim);
  f.pairs.reserve(static_cast<std::size_t>(2 * dim));
  for (int n = 1; n <= dim; ++n) {
    auto e = unit_vector(space, n);
    auto half = e.coords;
    half[static_cast<std::size_t>(n - 1)] = 0.5;
    f.pairs.push_back(FramePair{half, e.coords});
    f.pairs.push_back(FramePair{half, e.coords});
  }
  return f;
}

Frame summing_basis_frame(int dim) {
  require(dim >= 1, "dimension must be positive");
  const SpaceSpec space = SpaceSpec::C0(dim);
  Frame f;
  f.space = space;
  f.label = "summing:" + std::to_string(dim);
  f.pairs.reserve(static_cast<std::size_t>(dim));
  for (int n = 1; n <= dim; ++n) {
    std::vector<double> a(static_cast<std::size_t>(dim), 0.0);
    for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k)] = 1.0;
    std::vector<double> b(static_cast<std::size_t>(dim), 0.0);
    b[static_cast<std::size_t>(n - 1)] = 1.0;
    if (n < dim) b[static_cast<std::size_t>(n)] = -1.0;  // truncation closure at n == dim
    f.pairs.push_back(FramePair{std::move(a), std::move(b)});
  }
  return f;
}

FddSpec fdd_random(const SpaceSpec& space, std::span<const int> block_dims,
                   std::uint64_t seed, double max_condition) {
  require(space.dim >= 1, "dimension must be positive");
  require(!block_dims.empty(), "at least one block required");
  require(max_condition >= 0.0, "condition threshold must be nonnegative");
  int total = 0;
  for (int d : block_dims) {
    require(d >= 1, "block dimensions must be positive");
    total += d;
  }
  require(total == space.dim, "block dimensions must sum to the space dimension");

  FddSpec fdd;
  fdd.space = space;
  {
    std::ostringstream os;
    os << "fdd_random:" << space_id_text(space) << ":blocks=";
    for (std::size_t i = 0; i < block_dims.size(); ++i) {
      if (i) os << ",";
      os << block_dims[i];
    }
    os << ":seed=" << seed;
    fdd.label = os.str();
  }

  Rng rng(seed);
  const bool euclidean = space.kind == SpaceKind::lp && space.p == 2.0;
  const auto dim = static_cast<std::size_t>(space.dim);
  int offset = 0;

  for (int d : block_dims) {
    FddBlock block;
    block.projection.assign(dim, std::vector<double>(dim, 0.0));
    for (int i = 0; i < d; ++i)
      block.projection[static_cast<std::size_t>(offset + i)][static_cast<std::size_t>(offset + i)] = 1.0;

    Eigen::MatrixXd basis(d, d);  // columns are block-local basis vectors
    Eigen::MatrixXd dual(d, d);   // columns are block-local dual functionals

    if (d == 1) {
      const double s = rng.gaussian() < 0.0 ? -1.0 : 1.0;
      basis(0, 0) = s;
      dual(0, 0) = s;
    } else if (euclidean) {
      // Haar-orthonormal via QR of a gaussian matrix, signs fixed so the
      // draw is unambiguous. Orthonormal blocks are self-dual, hence
      // Auerbach.
      Eigen::MatrixXd g(d, d);
      for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) g(i, j) = rng.gaussian();
      Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
      Eigen::MatrixXd q = qr.householderQ();
      const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
      for (int j = 0; j < d; ++j)
        if (r(j, j) < 0.0) q.col(j) = -q.col(j);
      basis = q;
      dual = q;
    } else {
      SpaceSpec block_space = space;
      block_space.dim = d;
      bool accepted = false;
      for (int attempt = 0; attempt < 100 && !accepted; ++attempt) {
        Eigen::MatrixXd g(d, d);
        for (int j = 0; j < d; ++j) {
          for (int i = 0; i < d; ++i) g(i, j) = rng.gaussian();
          std::vector<double> col(static_cast<std::size_t>(d));
          for (int i = 0; i < d; ++i) col[static_cast<std::size_t>(i)] = g(i, j);
          const double n = norm(block_space, col);
          if (n < 1e-12) break;
          g.col(j) /= n;
        }
        const Eigen::JacobiSVD<Eigen::MatrixXd> svd(g);
        const double smin = svd.singularValues()(d - 1);
        if (smin < 1e-12) continue;
        if (svd.singularValues()(0) / smin > max_condition) continue;
        basis = g;
        dual = g.inverse().transpose();
        accepted = true;
      }
      if (!accepted)
        throw std::runtime_error(
            "no well-conditioned block basis found in 100 draws");
    }

    for (int j = 0; j < d; ++j) {
      std::vector<double> e(dim, 0.0), f(dim, 0.0);
      for (int i = 0; i < d; ++i) {
        e[static_cast<std::size_t>(offset + i)] = basis(i, j);
        f[static_cast<std::size_t>(offset + i)] = dual(i, j);
      }
      block.basis.push_back(std::move(e));
      block.dual.push_back(std::move(f));
    }
    fdd.blocks.push_back(std::move(block));
    offset += d;
  }

  annotate_blocks(fdd);
  return fdd;
}

std::vector<CorpusEntry> corpus_catalog() {
  return {
      {"canonical", "canonical:<lp:p|c0|linf>:<dim>",
       "coordinate basis pairs (e_n, e_n*); unconditional; besselian constant 1"},
      {"halved_doubled", "halved_doubled:<dim>",
       "pairs ((1/2)e_n, e_n*) twice over c0; reconstructing but not a basis; "
       "unconditional"},
      {"summing", "summing:<dim>",
       "running-sum basis of c0; conditional; besselian constant 2*dim-1"},
      {"fdd_random", "fdd_random:<lp:p|c0|linf>:<dim>:blocks=<d1,d2,...>:seed=<n>",
       "random well-conditioned block decomposition, built into a frame; "
       "orthonormal (Auerbach) blocks over lp:2"},
  };
}

std::string space_id_text(const SpaceSpec& s) {
  std::string out = to_string(s.kind);
  if (s.kind == SpaceKind::lp) out += ":" + format_double(s.p);
  out += ":" + std::to_string(s.dim);
  return out;
}

SpaceSpec parse_space_spec(const std::string& text) {
  const auto parts = split(text, ':');
  require(!parts.empty(), "empty space spec");
  const std::string& kind = parts[0];
  if (kind == "lp") {
    require(parts.size() == 3, "lp space spec needs 'lp:<p>:<dim>'");
    return SpaceSpec::Lp(parse_real(parts[1], "lp exponent"),
                         parse_int(parts[2], "dimension"));
  }
  if (kind == "c0") {
    require(parts.size() == 2, "c0 space spec needs 'c0:<dim>'");
    return SpaceSpec::C0(parse_int(parts[1], "dimension"));
  }
  if (kind == "linf") {
    require(parts.size() == 2, "linf space spec needs 'linf:<dim>'");
    return SpaceSpec::Linf(parse_int(parts[1], "dimension"));
  }
  throw std::invalid_argument("unknown space kind: '" + kind + "'");
}

CorpusId parse_corpus_id(const std::string& text) {
  const auto parts = split(text, ':');
  require(!parts.empty() && !parts[0].empty(), "empty corpus id");
  CorpusId id;
  const std::string& family = parts[0];

  const auto join_tail = [&](std::size_t from, std::size_t count) {
    std::string out;
    for (std::size_t i = from; i < from + count; ++i) {
      if (i > from) out += ":";
      out += parts[i];
    }
    return out;
  };

  if (family == "canonical") {
    require(parts.size() >= 3, "canonical id needs a space: canonical:lp:2:16");
    id.family = CorpusFamily::canonical;
    id.space = parse_space_spec(join_tail(1, parts.size() - 1));
    id.text = "canonical:" + space_id_text(id.space);
    return id;
  }
  if (family == "halved_doubled" || family == "summing") {
    require(parts.size() == 2, family + " id needs a dimension");
    id.family = family == "summing" ? CorpusFamily::summing
                                    : CorpusFamily::halved_doubled;
    id.dim = parse_int(parts[1], "dimension");
    require(id.dim >= 1, "dimension must be positive");
    id.text = family + ":" + std::to_string(id.dim);
    return id;
  }
  if (family == "fdd_random") {
    // fdd_random:<space...>:blocks=...:seed=...
    require(parts.size() >= 4, "fdd_random id needs space, blocks= and seed=");
    std::size_t tail = parts.size();
    require(parts[tail - 1].rfind("seed=", 0) == 0, "missing seed= field");
    require(parts[tail - 2].rfind("blocks=", 0) == 0, "missing blocks= field");
    id.family = CorpusFamily::fdd_random;
    id.space = parse_space_spec(join_tail(1, tail - 3));
    const std::string blocks_text = parts[tail - 2].substr(7);
    for (const auto& tok : split(blocks_text, ','))
      id.blocks.push_back(parse_int(tok, "block dimension"));
    id.seed = parse_u64(parts[tail - 1].substr(5), "seed");
    int total = 0;
    for (int d : id.blocks) {
      require(d >= 1, "block dimensions must be positive");
      total += d;
    }
    require(total == id.space.dim, "blocks must sum to the space dimension");
    std::ostringstream os;
    os << "fdd_random:" << space_id_text(id.space) << ":blocks=" << blocks_text
       << ":seed=" << id.seed;
    id.text = os.str();
    return id;
  }
  throw std::invalid_argument("unknown corpus family: '" + family + "'");
}

FddSpec make_corpus_fdd(const CorpusId& id) {
  require(id.family == CorpusFamily::fdd_random,
          "only fdd_random ids describe a block decomposition");
  return fdd_random(id.space, id.blocks, id.seed);
}

Frame make_corpus_frame(const CorpusId& id) {
  switch (id.family) {
    case CorpusFamily::canonical: return canonical_basis_frame(id.space);
    case CorpusFamily::halved_doubled: return halved_doubled_frame(id.dim);
    case CorpusFamily::summing: return summing_basis_frame(id.dim);
    case CorpusFamily::fdd_random: return build_frame_from_fdd(make_corpus_fdd(id));
  }
  throw std::invalid_argument("unknown corpus family");
}

Frame make_corpus_frame(const std::string& id) {
  return make_corpus_frame(parse_corpus_id(id));
}

}  // namespace framelab
