#include "sierpinski/ifs.hpp"

#include <cmath>

#include "sierpinski/error.hpp"

namespace sierpinski {

IfsSystem::IfsSystem(std::string name, std::vector<Similitude> maps)
    : name_(std::move(name)), maps_(std::move(maps)) {
  if (maps_.empty()) {
    throw DomainError("IFS '" + name_ + "' has no maps");
  }
  for (const auto& w : maps_) {
    if (!(modulus(w.scale) < 1.0)) {
      throw DomainError("IFS '" + name_ + "' has a non-contracting map");
    }
  }
}

IfsSystem paper_system() {
  return {"paper", {{0.5, {0.0, 0.0}}, {0.5, {0.5, 0.0}}, {0.5, {0.0, 0.5}}}};
}

IfsSystem equilateral_system() {
  return {"equilateral", {{0.5, {0.0, 0.0}}, {0.5, {0.5, 0.0}}, {0.5, {0.25, std::sqrt(3.0) / 4.0}}}};
}

IfsSystem system_by_name(const std::string& name) {
  if (name == "paper") {
    return paper_system();
  }
  if (name == "equilateral") {
    return equilateral_system();
  }
  throw DomainError("unknown IFS system '" + name + "'");
}

PointPath base_vector(BaseMode mode) {
  const Complex apex{0.5, std::sqrt(3.0) / 2.0};
  PointPath b;
  b.add_point({0.0, 0.0});
  b.add_point({1.0, 0.0});
  b.add_point(apex);
  b.add_point({0.0, 0.0});
  if (mode == BaseMode::Faithful) {
    b.add_point({kSentinelValue, 0.0});
  }
  return b;
}

PointPath concat(std::span<const PointPath> blocks, BaseMode mode) {
  PointPath out;
  for (const auto& block : blocks) {
    if (mode == BaseMode::Structured) {
      out.lift_pen();
    }
    out.append(block);
  }
  return out;
}

PointPath concat3(const PointPath& u1, const PointPath& u2, const PointPath& u3, BaseMode mode) {
  const PointPath blocks[] = {u1, u2, u3};
  return concat(blocks, mode);
}

PointPath ifs_step(const IfsSystem& sys, const PointPath& g, BaseMode mode) {
  std::vector<PointPath> blocks;
  blocks.reserve(sys.maps().size());
  for (const auto& w : sys.maps()) {
    blocks.push_back(g.map_points(w));
  }
  return concat(blocks, mode);
}

PointPath generate(const IfsSystem& sys, BaseMode mode, int depth) {
  if (depth < 0 || depth > kMaxDepth) {
    throw DomainError("depth must be in [0, " + std::to_string(kMaxDepth) + "], got " + std::to_string(depth));
  }
  if (mode == BaseMode::Faithful && depth > kMaxFaithfulDepth) {
    throw DomainError("sentinel inseparable beyond depth 5");
  }
  PointPath g = base_vector(mode);
  for (int d = 0; d < depth; ++d) {
    g = ifs_step(sys, g, mode);
  }
  return g;
}

SentinelPartition classify_sentinels(const PointPath& g, int depth) {
  if (depth < 0 || depth > kMaxFaithfulDepth) {
    throw DomainError("sentinel inseparable beyond depth 5");
  }
  SentinelPartition out;
  for (const Complex z : g.points()) {
    (z.re > kSentinelThreshold ? out.sentinels : out.attractor).push_back(z);
  }
  return out;
}

std::vector<bool> sentinel_mask(const PointPath& g) {
  std::vector<bool> mask(g.size(), false);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (const auto* z = std::get_if<Complex>(&g[i])) {
      mask[i] = z->re > kSentinelThreshold;
    }
  }
  return mask;
}

}  // namespace sierpinski
