// tfilter: train and apply classification-based least-squares repair filters.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tfilter/frame_io.hpp"
#include "tfilter/harness.hpp"
#include "tfilter/synth.hpp"

namespace {

using namespace tfilter;

struct Options {
    std::vector<std::string> inputs;
    std::vector<std::string> corpus;
    std::optional<int> width;
    std::optional<int> height;
    std::string embodiment = "deblock";
    std::optional<int> quality;
    std::optional<int> radius;
    std::optional<double> sigma;
    std::optional<double> alpha;
    std::optional<std::string> class_mode;
    std::optional<double> class_threshold;
    std::uint64_t min_samples = SolveOptions{}.min_samples;
    double ridge = 0.0;
    std::string lut;
    std::string out;
    std::string planes_dir;
    std::optional<std::size_t> max_frames;
    std::string stage = "candidate";
    std::uint64_t seed = 1;
};

void add_geometry(CLI::App* cmd, Options& o) {
    cmd->add_option("--width", o.width, "Frame width for raw YUV input")->check(CLI::PositiveNumber);
    cmd->add_option("--height", o.height, "Frame height for raw YUV input")->check(CLI::PositiveNumber);
    cmd->add_option("--max-frames", o.max_frames, "Use at most this many frames per sequence")
        ->check(CLI::PositiveNumber);
}

void add_pipeline(CLI::App* cmd, Options& o) {
    cmd->add_option("--embodiment", o.embodiment, "deblock, deblur or upscale")
        ->check(CLI::IsMember({"deblock", "deblur", "upscale"}))
        ->capture_default_str();
    cmd->add_option("--quality", o.quality, "Compression quality 1-100 (default 20)");
    cmd->add_option("--radius", o.radius, "Gaussian radius in pixels (default 2)");
    cmd->add_option("--sigma", o.sigma, "Gaussian standard deviation in pixels (default 1)");
    cmd->add_option("--alpha", o.alpha, "Peaking strength (default 0.2)");
}

void add_classifier(CLI::App* cmd, Options& o) {
    cmd->add_option("--class-mode", o.class_mode,
                    "Complexity bit: none, std, dr or entropy (default: std, none for upscale)")
        ->check(CLI::IsMember({"none", "std", "dr", "entropy"}));
    cmd->add_option("--class-threshold", o.class_threshold,
                    "Complexity threshold (default 10 for std, 32 for dr, 1 for entropy)");
}

RunConfig to_config(const Options& o) {
    RunConfig cfg;
    for (const auto& s : o.inputs) cfg.inputs.emplace_back(s);
    for (const auto& s : o.corpus) cfg.corpus.emplace_back(s);
    cfg.geometry = {o.width, o.height};
    cfg.out = o.out;
    cfg.lut = o.lut;
    cfg.planes_dir = o.planes_dir;
    cfg.max_frames = o.max_frames;
    cfg.stage = o.stage;

    auto spec = EmbodimentSpec::defaults(parse_embodiment(o.embodiment));
    if (o.quality) spec.compression.quality = *o.quality;
    if (o.radius) spec.gaussian.radius = *o.radius;
    if (o.sigma) spec.gaussian.sigma = *o.sigma;
    if (o.alpha) spec.peaking.alpha = *o.alpha;
    if (o.class_mode)
        spec.classifier = ClassifierSpec::with_default_threshold(parse_complexity_mode(*o.class_mode));
    if (o.class_threshold) spec.classifier.threshold = *o.class_threshold;
    spec.validate();
    cfg.embodiment = spec;

    cfg.solve.min_samples = o.min_samples;
    cfg.solve.ridge = o.ridge;
    if (!(o.ridge >= 0.0)) throw InvalidArgument("--ridge must be >= 0");
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification-based least-squares trained filters for repairing weak "
                 "video enhancement steps"};
    app.require_subcommand(1);
    app.footer(
        "Raw YUV files are planar 4:2:2 (Y, then U, then V per frame, no header);\n"
        "files ending in .pgm are binary greyscale images.\n\n"
        "CSV stages: degraded = Blocky / GB / DS, enhanced = Gaussian blur / Sharpen /\n"
        "Up-scaling, repaired = trained-filter output. Metrics are on luma only.\n\n"
        "Exit codes: 0 ok, 1 usage, 2 I/O or format, 3 internal error.");

    Options o;

    auto* degrade = app.add_subcommand("degrade", "Apply the embodiment's degradation");
    degrade->add_option("input", o.inputs, "Input sequence or image")->required()->expected(1);
    degrade->add_option("--out", o.out, "Output file")->required();
    add_geometry(degrade, o);
    add_pipeline(degrade, o);

    auto* enhance = app.add_subcommand("enhance", "Apply the embodiment's enhancement step");
    enhance->add_option("input", o.inputs, "Input sequence or image")->required()->expected(1);
    enhance->add_option("--out", o.out, "Output file")->required();
    add_geometry(enhance, o);
    add_pipeline(enhance, o);

    auto* train = app.add_subcommand("train", "Train a look-up table from target material");
    train->add_option("corpus", o.inputs, "Target files or directories")->required();
    train->add_option("--lut", o.lut, "Output table file");
    train->add_option("--out", o.out, "Alias for --lut");
    train->add_option("--min-samples", o.min_samples, "Classes with fewer samples stay identity")
        ->capture_default_str();
    train->add_option("--ridge", o.ridge, "Diagonal regularization added before solving")
        ->capture_default_str();
    add_geometry(train, o);
    add_pipeline(train, o);
    add_classifier(train, o);

    auto* repair = app.add_subcommand("repair", "Filter an enhanced sequence with a trained table");
    repair->add_option("input", o.inputs, "Enhanced sequence or image")->required()->expected(1);
    repair->add_option("--lut", o.lut, "Trained table")->required();
    repair->add_option("--out", o.out, "Output file")->required();
    add_geometry(repair, o);
    add_pipeline(repair, o);
    add_classifier(repair, o);

    auto* evaluate = app.add_subcommand("evaluate", "MSE, PSNR and SSIM of a candidate");
    evaluate->add_option("reference", o.inputs, "Reference and candidate")->required()->expected(2);
    evaluate->add_option("--out", o.out, "CSV file (default stdout)");
    evaluate->add_option("--stage", o.stage, "Stage label for the CSV row")->capture_default_str();
    add_geometry(evaluate, o);

    auto* experiment = app.add_subcommand(
        "experiment", "Train on a corpus, then degrade, enhance, repair and score test inputs");
    experiment->add_option("inputs", o.inputs, "Test files or directories")->required();
    experiment->add_option("--corpus", o.corpus, "Training files or directories")->required();
    experiment->add_option("--out", o.out, "CSV file (default stdout)");
    experiment->add_option("--lut", o.lut, "Also save the trained table here");
    experiment->add_option("--planes-dir", o.planes_dir, "Save every stage's output here");
    experiment->add_option("--min-samples", o.min_samples, "Classes with fewer samples stay identity")
        ->capture_default_str();
    experiment->add_option("--ridge", o.ridge, "Diagonal regularization added before solving")
        ->capture_default_str();
    add_geometry(experiment, o);
    add_pipeline(experiment, o);
    add_classifier(experiment, o);

    auto* synth = app.add_subcommand("synth", "Write a synthetic detailed test image (.pgm)");
    int synth_w = 512;
    int synth_h = 512;
    synth->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    synth->add_option("--width", synth_w, "Width")->check(CLI::PositiveNumber)->capture_default_str();
    synth->add_option("--height", synth_h, "Height")->check(CLI::PositiveNumber)->capture_default_str();
    synth->add_option("--out", o.out, "Output .pgm file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const RunConfig cfg = to_config(o);
        if (degrade->parsed()) cmd_degrade(cfg);
        else if (enhance->parsed()) cmd_enhance(cfg);
        else if (train->parsed()) cmd_train(cfg, std::cerr);
        else if (repair->parsed()) cmd_repair(cfg);
        else if (evaluate->parsed()) cmd_evaluate(cfg, std::cout);
        else if (experiment->parsed()) cmd_experiment(cfg, std::cout, std::cerr);
        else if (synth->parsed()) write_pgm(synth_image(o.seed, synth_w, synth_h), cfg.out);
    } catch (const std::exception& e) {
        std::cerr << "tfilter: error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return kExitOk;
}
