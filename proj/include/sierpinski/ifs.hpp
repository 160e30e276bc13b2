#pragma once

#include <span>
#include <string>
#include <vector>

#include "sierpinski/complex.hpp"
#include "sierpinski/path.hpp"

namespace sierpinski {

/// w(z) = scale * z + offset.
struct Similitude {
  Complex scale;
  Complex offset;

  Complex operator()(Complex z) const { return scale * z + offset; }
};

class IfsSystem {
 public:
  /// Throws DomainError for an empty map list or a non-contracting map.
  IfsSystem(std::string name, std::vector<Similitude> maps);

  const std::string& name() const { return name_; }
  std::span<const Similitude> maps() const { return maps_; }

 private:
  std::string name_;
  std::vector<Similitude> maps_;
};

/// z/2, (z+1)/2, (z+i)/2.
IfsSystem paper_system();

/// z/2, z/2 + 1/2, z/2 + 1/4 + i*sqrt(3)/4: the equilateral gasket.
IfsSystem equilateral_system();

/// Looks up "paper" or "equilateral"; throws DomainError otherwise.
IfsSystem system_by_name(const std::string& name);

/// How copies of the base are kept apart in the stacked vector.
///  - Faithful: the base carries a far-away real point (100) that the maps
///    transform along with everything else, so a line plot jumps off-canvas
///    between copies.
///  - Structured: copies are separated by explicit pen-ups.
enum class BaseMode { Faithful, Structured };

inline constexpr double kSentinelValue = 100.0;
inline constexpr double kSentinelThreshold = 2.0;
inline constexpr int kMaxDepth = 10;
inline constexpr int kMaxFaithfulDepth = 5;

PointPath base_vector(BaseMode mode);

/// Stacks the blocks in order. Structured mode puts a pen-up between blocks.
PointPath concat(std::span<const PointPath> blocks, BaseMode mode);
PointPath concat3(const PointPath& u1, const PointPath& u2, const PointPath& u3, BaseMode mode);

/// One subdivision step: every map applied to the whole path, results
/// stacked in map order.
PointPath ifs_step(const IfsSystem& sys, const PointPath& g, BaseMode mode);

/// ifs_step applied `depth` times to base_vector(mode).
PointPath generate(const IfsSystem& sys, BaseMode mode, int depth);

struct SentinelPartition {
  std::vector<Complex> attractor;
  std::vector<Complex> sentinels;
};

/// Splits a faithful-mode path into attractor points and images of the
/// sentinel (real part > 2). Valid for depth <= 5.
SentinelPartition classify_sentinels(const PointPath& g, int depth);

/// Per-element flag, true for points with real part above the threshold.
std::vector<bool> sentinel_mask(const PointPath& g);

}  // namespace sierpinski
