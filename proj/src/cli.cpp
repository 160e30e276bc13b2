#include "sierpinski/cli.hpp"

#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "sierpinski/csv.hpp"
#include "sierpinski/error.hpp"
#include "sierpinski/gasket.hpp"
#include "sierpinski/post_map.hpp"

namespace sierpinski::cli {
namespace {

namespace fs = std::filesystem;

// exp(z^(4/3)) sends sentinel images back into view, so fig11 is defined on
// the structured base.
constexpr std::array<FigurePreset, 11> kFigures{{
    {"fig1", Construction::Midpoint, 1, BaseMode::Structured, "identity", RenderMode::Polyline,
     "midpoint construction, iteration 1"},
    {"fig2", Construction::Midpoint, 2, BaseMode::Structured, "identity", RenderMode::Polyline,
     "midpoint construction, iteration 2"},
    {"fig3", Construction::Midpoint, 3, BaseMode::Structured, "identity", RenderMode::Polyline,
     "midpoint construction, iteration 3"},
    {"fig4", Construction::Ifs, 5, BaseMode::Faithful, "identity", RenderMode::Scatter, "f(z) = z on G6"},
    {"fig5", Construction::Ifs, 5, BaseMode::Faithful, "pow:2", RenderMode::Scatter, "f(z) = z^2 on G6"},
    {"fig6", Construction::Ifs, 5, BaseMode::Faithful, "pow:3", RenderMode::Scatter, "f(z) = z^3 on G6"},
    {"fig7", Construction::Ifs, 5, BaseMode::Faithful, "pow:4", RenderMode::Scatter, "f(z) = z^4 on G6"},
    {"fig8", Construction::Ifs, 5, BaseMode::Faithful, "pow:6", RenderMode::Scatter, "f(z) = z^6 on G6"},
    {"fig9", Construction::Ifs, 3, BaseMode::Faithful, "pow:6", RenderMode::Scatter, "f(z) = z^6 on G4"},
    {"fig10", Construction::Ifs, 4, BaseMode::Faithful, "pow:6", RenderMode::Scatter, "f(z) = z^6 on G5"},
    {"fig11", Construction::Ifs, 5, BaseMode::Structured, "exppow:4/3", RenderMode::Scatter,
     "f(z) = exp(z^(4/3)) on G6"},
}};

constexpr int kFigureCanvas = 640;

// Bad arguments detected before any work starts.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Svg, Ppm, Csv };

struct RenderFlags {
  std::optional<int> width;
  std::optional<int> height;
  std::optional<std::string> mode;
  std::optional<double> margin;
  std::optional<double> clip_threshold;
};

struct Job {
  PointPath data;      // written for CSV output
  PointPath drawable;  // rendered for SVG/PPM output
  RenderStyle style;
};

void add_render_flags(CLI::App* cmd, RenderFlags& flags) {
  cmd->add_option("--width", flags.width, "Canvas width in pixels (>= 16)");
  cmd->add_option("--height", flags.height, "Canvas height in pixels (>= 16)");
  cmd->add_option("--mode", flags.mode, "scatter or polyline")->check(CLI::IsMember({"scatter", "polyline"}));
  cmd->add_option("--margin", flags.margin, "Margin as a fraction of the bounding box, in [0, 0.5]");
  cmd->add_option("--clip-threshold", flags.clip_threshold, "Points with a larger real part are not drawn");
}

RenderStyle make_style(const RenderFlags& flags, RenderMode default_mode, double default_clip) {
  RenderStyle style;
  style.mode = default_mode;
  if (flags.mode) {
    style.mode = *flags.mode == "polyline" ? RenderMode::Polyline : RenderMode::Scatter;
  }
  style.canvas_width = flags.width.value_or(style.canvas_width);
  style.canvas_height = flags.height.value_or(style.canvas_height);
  style.margin = flags.margin.value_or(style.margin);
  style.clip_threshold = flags.clip_threshold.value_or(default_clip);
  try {
    style.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return style;
}

Format resolve_format(const std::optional<std::string>& format, const std::string& out) {
  std::string name;
  if (format) {
    name = *format;
  } else {
    name = fs::path(out).extension().string();
    if (!name.empty()) {
      name.erase(0, 1);
    }
  }
  if (name == "ppm") {
    return Format::Ppm;
  }
  if (name == "csv") {
    return Format::Csv;
  }
  return Format::Svg;
}

void write_atomically(const fs::path& target, std::string_view bytes) {
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) {
      throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    }
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    file.close();
    if (!file) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw std::runtime_error("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + target.string() + "'");
  }
}

std::string encode(const Job& job, Format format) {
  if (format == Format::Csv) {
    return write_csv(job.data);
  }
  const Viewport vp = fit_viewport(job.drawable, job.style);
  if (format == Format::Ppm) {
    const auto bytes = render_ppm(job.drawable, job.style, vp);
    return {bytes.begin(), bytes.end()};
  }
  return render_svg(job.drawable, job.style, vp);
}

struct MidpointRequest {
  double size = 1.0;
  int stage = 1;
};

void check_midpoint(const MidpointRequest& req) {
  if (!(req.size > 0.0)) {
    throw UsageError("--size must be positive");
  }
  if (req.stage < 1 || req.stage > kMaxGasketStage) {
    throw UsageError("--stage must be in [1, " + std::to_string(kMaxGasketStage) + "]");
  }
}

Job midpoint_job(const MidpointRequest& req, RenderStyle style) {
  Job job;
  job.data = triangles_to_path(iterate_gasket(req.size, req.stage));
  job.drawable = job.data;
  job.style = style;
  return job;
}

struct IfsRequest {
  std::string system = "paper";
  int depth = 5;
  BaseMode base = BaseMode::Faithful;
  PostMap map;
};

IfsRequest check_ifs(const std::string& system, int depth, const std::string& base, const std::string& map) {
  IfsRequest req;
  req.system = system;
  req.depth = depth;
  req.base = base == "structured" ? BaseMode::Structured : BaseMode::Faithful;
  try {
    (void)system_by_name(system);
    req.map = PostMap::parse(map);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (depth < 0 || depth > kMaxDepth) {
    throw UsageError("depth out of range: must be in [0, " + std::to_string(kMaxDepth) + "], got " +
                     std::to_string(depth));
  }
  if (req.base == BaseMode::Faithful && depth > kMaxFaithfulDepth) {
    throw UsageError("sentinel inseparable beyond depth 5; use --base structured");
  }
  if (req.base == BaseMode::Faithful && std::holds_alternative<PostMap::ExpRationalPower>(req.map.kind())) {
    throw UsageError("exp-power maps need --base structured: sentinel images are not separable after exp");
  }
  return req;
}

// Faithful sentinels are identified on the generated set before the post-map
// and lifted out of the drawable path; under z^6 some of their images land
// at real part < 2 where the clip threshold alone would keep them.
Job ifs_job(const IfsRequest& req, RenderStyle style) {
  const PointPath g = generate(system_by_name(req.system), req.base, req.depth);
  Job job;
  job.data = apply_post_map(req.map, g, req.base);
  job.drawable = req.base == BaseMode::Faithful ? job.data.drop_points(sentinel_mask(g)) : job.data;
  job.style = style;
  return job;
}

constexpr double kNoClip = std::numeric_limits<double>::infinity();

}  // namespace

std::span<const FigurePreset> figure_presets() { return kFigures; }

const FigurePreset* find_figure(std::string_view name) {
  for (const auto& f : kFigures) {
    if (f.name == name) {
      return &f;
    }
  }
  return nullptr;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sierpinski gasket point sets, complex post-maps and figure rendering", "sierpinski"};
  app.require_subcommand(1);

  MidpointRequest gasket_req;
  RenderFlags gasket_flags;
  std::string gasket_out;
  std::optional<std::string> gasket_format;
  auto* gasket_cmd = app.add_subcommand("gasket", "Midpoint subdivision of an equilateral triangle");
  gasket_cmd->add_option("--size", gasket_req.size, "Side length L")->capture_default_str();
  gasket_cmd->add_option("--stage", gasket_req.stage, "Iteration stage k (1 = the uncut triangle)")
      ->capture_default_str();
  gasket_cmd->add_option("--out", gasket_out, "Output file")->required();
  gasket_cmd->add_option("--format", gasket_format, "svg, ppm or csv")->check(CLI::IsMember({"svg", "ppm", "csv"}));
  add_render_flags(gasket_cmd, gasket_flags);

  std::string system = "paper";
  int depth = 5;
  std::string base = "faithful";
  std::string map = "identity";
  RenderFlags gen_flags;
  std::string gen_out;
  std::optional<std::string> gen_format;
  auto* gen_cmd = app.add_subcommand("generate", "Deterministic IFS subdivision with an optional post-map");
  gen_cmd->add_option("--system", system, "paper or equilateral")
      ->check(CLI::IsMember({"paper", "equilateral"}))
      ->capture_default_str();
  gen_cmd->add_option("--depth", depth, "Number of subdivision steps d (G_{d+1})")->capture_default_str();
  gen_cmd->add_option("--base", base, "faithful or structured")
      ->check(CLI::IsMember({"faithful", "structured"}))
      ->capture_default_str();
  gen_cmd->add_option("--map", map, "identity, pow:N or exppow:NUM/DEN")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output file")->required();
  gen_cmd->add_option("--format", gen_format, "svg, ppm or csv")->check(CLI::IsMember({"svg", "ppm", "csv"}));
  add_render_flags(gen_cmd, gen_flags);

  std::string figure_name;
  std::string out_dir = ".";
  auto* fig_cmd = app.add_subcommand("figure", "Write one of the preset figures fig1 ... fig11 as SVG");
  fig_cmd->add_option("--name", figure_name, "fig1 ... fig11")->required();
  fig_cmd->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("sierpinski");
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }

  std::function<void()> action;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (gasket_cmd->parsed()) {
      check_midpoint(gasket_req);
      const RenderStyle style = make_style(gasket_flags, RenderMode::Polyline, kNoClip);
      const Format format = resolve_format(gasket_format, gasket_out);
      action = [=] { write_atomically(gasket_out, encode(midpoint_job(gasket_req, style), format)); };
    } else if (gen_cmd->parsed()) {
      const IfsRequest req = check_ifs(system, depth, base, map);
      const double clip = req.base == BaseMode::Faithful ? kSentinelThreshold : kNoClip;
      const RenderStyle style = make_style(gen_flags, RenderMode::Scatter, clip);
      const Format format = resolve_format(gen_format, gen_out);
      action = [=] { write_atomically(gen_out, encode(ifs_job(req, style), format)); };
    } else if (fig_cmd->parsed()) {
      const FigurePreset* preset = find_figure(figure_name);
      if (preset == nullptr) {
        throw UsageError("unknown figure '" + figure_name + "' (expected fig1 ... fig11)");
      }
      RenderStyle style;
      style.mode = preset->mode;
      style.canvas_width = kFigureCanvas;
      style.canvas_height = kFigureCanvas;
      const fs::path target = fs::path(out_dir) / (std::string(preset->name) + ".svg");
      if (preset->construction == Construction::Midpoint) {
        const MidpointRequest req{1.0, preset->level};
        style.clip_threshold = kNoClip;
        action = [=] {
          fs::create_directories(out_dir);
          write_atomically(target, encode(midpoint_job(req, style), Format::Svg));
        };
      } else {
        const IfsRequest req =
            check_ifs("paper", preset->level, preset->base == BaseMode::Faithful ? "faithful" : "structured",
                      std::string(preset->map));
        style.clip_threshold = preset->base == BaseMode::Faithful ? kSentinelThreshold : kNoClip;
        action = [=] {
          fs::create_directories(out_dir);
          write_atomically(target, encode(ifs_job(req, style), Format::Svg));
        };
      }
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sierpinski::cli
