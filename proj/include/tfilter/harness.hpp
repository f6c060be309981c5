#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tfilter/embodiment.hpp"
#include "tfilter/frame_io.hpp"
#include "tfilter/lsq.hpp"
#include "tfilter/metrics.hpp"

namespace tfilter {

namespace fs = std::filesystem;

/// Process exit codes used by the command line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitIo = 2,
    kExitInternal = 3,
};

/// Maps an exception thrown by a command onto an exit code.
int exit_code_for(const std::exception& e);

enum class MediaKind { yuv, pgm };

/// A loaded input: raw 4:2:2 frames, or a single greyscale image (stored as
/// a frame without chroma).
struct Media {
    MediaKind kind = MediaKind::yuv;
    std::vector<Yuv422Frame> frames;

    std::vector<LumaPlane> luma() const;
};

struct Geometry {
    std::optional<int> width;
    std::optional<int> height;
};

/// `.pgm` files are greyscale images; anything else is headerless YUV and
/// needs a geometry.
MediaKind media_kind_for(const fs::path& path);
Media load_media(const fs::path& path, const Geometry& geometry,
                 std::optional<std::size_t> max_frames = std::nullopt);
void save_media(const Media& media, const fs::path& path);

using PlaneOp = std::function<LumaPlane(const LumaPlane&)>;

/// Applies `luma_op` to every frame. Chroma is copied unchanged when the luma
/// geometry is preserved and otherwise resampled with `chroma_op`.
Media map_luma(const Media& media, const PlaneOp& luma_op, const PlaneOp& chroma_op = {});

/// Degradation / enhancement for whole media, chroma handled as map_luma.
Media degrade_media(const Media& media, const EmbodimentSpec& spec);
Media enhance_media(const Media& media, const EmbodimentSpec& spec);

/// Expands directories (sorted, .yuv and .pgm entries only) and keeps files.
std::vector<fs::path> expand_inputs(const std::vector<fs::path>& paths);

struct RunConfig {
    std::vector<fs::path> inputs;
    std::vector<fs::path> corpus;
    Geometry geometry;
    fs::path out;
    fs::path lut;
    fs::path planes_dir;
    EmbodimentSpec embodiment = EmbodimentSpec::defaults(EmbodimentKind::deblock);
    SolveOptions solve;
    SsimSpec ssim;
    std::optional<std::size_t> max_frames;
    std::string stage = "candidate";
};

/// One CSV row. Missing metrics are written as empty cells.
struct MetricRow {
    std::string name;
    std::string stage;
    std::optional<QualityReport> report;
};

inline constexpr const char* kCsvHeader = "name,stage,mse,psnr,ssim";

std::string format_csv_row(const MetricRow& row);
std::string format_csv(const std::vector<MetricRow>& rows);

/// Sequence-level report: mean per-frame MSE, PSNR of that mean, mean SSIM.
QualityReport evaluate_sequence(const std::vector<LumaPlane>& ref,
                                const std::vector<LumaPlane>& cand, const SsimSpec& spec);

CoefficientTable train_on_corpus(const std::vector<fs::path>& corpus, const RunConfig& cfg);

void cmd_degrade(const RunConfig& cfg);
void cmd_enhance(const RunConfig& cfg);
void cmd_train(const RunConfig& cfg, std::ostream& log);
void cmd_repair(const RunConfig& cfg);
void cmd_evaluate(const RunConfig& cfg, std::ostream& out);
void cmd_experiment(const RunConfig& cfg, std::ostream& out, std::ostream& log);

}  // namespace tfilter
