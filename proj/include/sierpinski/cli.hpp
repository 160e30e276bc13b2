#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "sierpinski/ifs.hpp"
#include "sierpinski/plot.hpp"

namespace sierpinski::cli {

enum class Construction { Midpoint, Ifs };

/// Fixed recipe for one of the reproduced figures. `level` is the stage for
/// the midpoint construction and the IFS depth otherwise (G_{d+1} = T^d(B)).
struct FigurePreset {
  std::string_view name;
  Construction construction;
  int level;
  BaseMode base;
  std::string_view map;
  RenderMode mode;
  std::string_view caption;
};

/// fig1 ... fig11.
std::span<const FigurePreset> figure_presets();

/// nullptr when unknown.
const FigurePreset* find_figure(std::string_view name);

/// Runs the command line `args` (program name excluded).
/// Returns 0 on success, 2 on usage or validation errors and 1 on runtime
/// failures (numeric overflow, I/O).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sierpinski::cli
