#include "tfilter/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "tfilter/lut_io.hpp"
#include "tfilter/repair.hpp"

namespace tfilter {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InvalidArgument*>(&e)) return kExitUsage;
    if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const FormatError*>(&e) ||
        dynamic_cast<const GeometryError*>(&e))
        return kExitIo;
    return kExitInternal;
}

std::vector<LumaPlane> Media::luma() const {
    std::vector<LumaPlane> out;
    out.reserve(frames.size());
    for (const auto& f : frames) out.push_back(f.y);
    return out;
}

MediaKind media_kind_for(const fs::path& path) {
    auto ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(), [](unsigned char c) { return std::tolower(c); });
    return ext == ".pgm" ? MediaKind::pgm : MediaKind::yuv;
}

Media load_media(const fs::path& path, const Geometry& geometry,
                 std::optional<std::size_t> max_frames) {
    Media m;
    m.kind = media_kind_for(path);
    if (m.kind == MediaKind::pgm) {
        m.frames.push_back({read_pgm(path), Plane{}, Plane{}});
        return m;
    }
    if (!geometry.width || !geometry.height)
        throw InvalidArgument(path.string() + ": raw YUV input needs --width and --height");
    m.frames = read_sequence(path, *geometry.width, *geometry.height);
    if (max_frames && m.frames.size() > *max_frames) m.frames.resize(*max_frames);
    return m;
}

void save_media(const Media& media, const fs::path& path) {
    if (media.frames.empty()) throw InvalidArgument("nothing to write to " + path.string());
    if (media.kind == MediaKind::pgm) {
        write_pgm(media.frames.front().y, path);
    } else {
        write_sequence(media.frames, path);
    }
}

Media map_luma(const Media& media, const PlaneOp& luma_op, const PlaneOp& chroma_op) {
    Media out;
    out.kind = media.kind;
    out.frames.reserve(media.frames.size());
    for (const auto& f : media.frames) {
        Yuv422Frame g{luma_op(f.y), Plane{}, Plane{}};
        if (media.kind == MediaKind::yuv) {
            if (g.y.same_geometry(f.y)) {
                g.u = f.u;
                g.v = f.v;
            } else {
                if (!chroma_op)
                    throw GeometryError("luma geometry changed but no chroma resampler given");
                g.u = chroma_op(f.u);
                g.v = chroma_op(f.v);
            }
            validate_frame(g);
        }
        out.frames.push_back(std::move(g));
    }
    return out;
}

namespace {

void check_chroma_downsample(const Media& media) {
    if (media.kind != MediaKind::yuv || media.frames.empty()) return;
    const auto& u = media.frames.front().u;
    if (u.width() % 2 != 0 || u.height() % 2 != 0)
        throw GeometryError("down-sampling a 4:2:2 sequence needs a width divisible by 4 and an "
                            "even height, got " + geometry_string(media.frames.front().y));
}

}  // namespace

Media degrade_media(const Media& media, const EmbodimentSpec& spec) {
    spec.validate();
    if (spec.kind == EmbodimentKind::upscale) check_chroma_downsample(media);
    return map_luma(media, [&](const LumaPlane& p) { return spec.degrade(p); }, downsample_2x);
}

Media enhance_media(const Media& media, const EmbodimentSpec& spec) {
    spec.validate();
    return map_luma(media, [&](const LumaPlane& p) { return spec.enhance(p); }, bilinear_upscale_2x);
}

std::vector<fs::path> expand_inputs(const std::vector<fs::path>& paths) {
    std::vector<fs::path> out;
    for (const auto& p : paths) {
        if (fs::is_directory(p)) {
            std::vector<fs::path> entries;
            for (const auto& e : fs::directory_iterator(p)) {
                if (!e.is_regular_file()) continue;
                auto ext = e.path().extension().string();
                std::transform(ext.begin(), ext.end(), ext.begin(),
                               [](unsigned char c) { return std::tolower(c); });
                if (ext == ".yuv" || ext == ".pgm") entries.push_back(e.path());
            }
            std::sort(entries.begin(), entries.end());
            out.insert(out.end(), entries.begin(), entries.end());
        } else if (fs::exists(p)) {
            out.push_back(p);
        } else {
            throw IoError("no such file or directory: " + p.string());
        }
    }
    return out;
}

namespace {

std::string fixed(double v, int decimals) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

}  // namespace

std::string format_csv_row(const MetricRow& row) {
    std::string s = row.name + "," + row.stage + ",";
    if (row.report) {
        s += fixed(row.report->mse, 2) + "," + fixed(row.report->psnr, 2) + "," +
             fixed(row.report->ssim, 4);
    } else {
        s += ",,";
    }
    return s;
}

std::string format_csv(const std::vector<MetricRow>& rows) {
    std::string s = std::string(kCsvHeader) + "\n";
    for (const auto& r : rows) s += format_csv_row(r) + "\n";
    return s;
}

QualityReport evaluate_sequence(const std::vector<LumaPlane>& ref,
                                const std::vector<LumaPlane>& cand, const SsimSpec& spec) {
    if (ref.empty() || ref.size() != cand.size())
        throw GeometryError("evaluate: frame count mismatch (" + std::to_string(ref.size()) +
                            " vs " + std::to_string(cand.size()) + ")");
    double mse_sum = 0.0;
    double ssim_sum = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        const auto r = evaluate(ref[i], cand[i], spec);
        mse_sum += r.mse;
        ssim_sum += r.ssim;
    }
    QualityReport out;
    out.mse = mse_sum / static_cast<double>(ref.size());
    out.psnr = psnr(out.mse);
    out.ssim = ssim_sum / static_cast<double>(ref.size());
    return out;
}

CoefficientTable train_on_corpus(const std::vector<fs::path>& corpus, const RunConfig& cfg) {
    const auto& spec = cfg.embodiment;
    spec.validate();
    const auto files = expand_inputs(corpus);
    if (files.empty()) throw InvalidArgument("training corpus is empty");
    AccumulatorSet acc(spec.classifier.class_bits());
    for (const auto& file : files) {
        const Media media = load_media(file, cfg.geometry, cfg.max_frames);
        for (const auto& target : media.luma()) {
            const LumaPlane enhanced = spec.enhance(spec.degrade(target));
            if (!enhanced.same_geometry(target))
                throw GeometryError(file.string() + ": enhanced plane is " +
                                    geometry_string(enhanced) + " but target is " +
                                    geometry_string(target));
            acc.accumulate_plane(enhanced, target, spec.classifier);
        }
    }
    return solve_all(acc, cfg.solve);
}

namespace {

const fs::path& single_input(const RunConfig& cfg, const char* cmd) {
    if (cfg.inputs.size() != 1)
        throw InvalidArgument(std::string(cmd) + " takes exactly one input");
    return cfg.inputs.front();
}

const fs::path& require_out(const RunConfig& cfg, const char* cmd) {
    if (cfg.out.empty()) throw InvalidArgument(std::string(cmd) + " needs --out");
    return cfg.out;
}

void write_text_atomic(const fs::path& path, const std::string& text) {
    write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string with_stage(const fs::path& input, const std::string& stage) {
    return input.stem().string() + "." + stage + input.extension().string();
}

}  // namespace

void cmd_degrade(const RunConfig& cfg) {
    const auto& in = single_input(cfg, "degrade");
    const auto& out = require_out(cfg, "degrade");
    save_media(degrade_media(load_media(in, cfg.geometry, cfg.max_frames), cfg.embodiment), out);
}

void cmd_enhance(const RunConfig& cfg) {
    const auto& in = single_input(cfg, "enhance");
    const auto& out = require_out(cfg, "enhance");
    save_media(enhance_media(load_media(in, cfg.geometry, cfg.max_frames), cfg.embodiment), out);
}

void cmd_train(const RunConfig& cfg, std::ostream& log) {
    const fs::path lut = cfg.lut.empty() ? cfg.out : cfg.lut;
    if (lut.empty()) throw InvalidArgument("train needs --lut (or --out) for the table");
    if (cfg.inputs.empty()) throw InvalidArgument("train needs at least one corpus input");
    const auto table = train_on_corpus(cfg.inputs, cfg);
    write_lut(table, lut);
    log << "trained " << table.solved_count() << " of " << table.class_count()
        << " classes -> " << lut.string() << "\n";
}

void cmd_repair(const RunConfig& cfg) {
    const auto& in = single_input(cfg, "repair");
    const auto& out = require_out(cfg, "repair");
    if (cfg.lut.empty()) throw InvalidArgument("repair needs --lut");
    const auto table = read_lut(cfg.lut);
    const auto& spec = cfg.embodiment.classifier;
    if (table.class_bits() != spec.class_bits())
        throw InvalidArgument("table " + cfg.lut.string() + " has " +
                              std::to_string(table.class_bits()) + " class bits, classifier '" +
                              std::string(to_string(spec.mode)) + "' needs " +
                              std::to_string(spec.class_bits()));
    const Media media = load_media(in, cfg.geometry, cfg.max_frames);
    save_media(map_luma(media, [&](const LumaPlane& p) { return repair_plane(p, table, spec); }),
               out);
}

void cmd_evaluate(const RunConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() != 2)
        throw InvalidArgument("evaluate takes a reference and a candidate");
    const Media ref = load_media(cfg.inputs[0], cfg.geometry, cfg.max_frames);
    const Media cand = load_media(cfg.inputs[1], cfg.geometry, cfg.max_frames);
    const MetricRow row{cfg.inputs[1].stem().string(), cfg.stage,
                        evaluate_sequence(ref.luma(), cand.luma(), cfg.ssim)};
    const std::string csv = format_csv({row});
    if (cfg.out.empty()) {
        out << csv;
    } else {
        write_text_atomic(cfg.out, csv);
    }
}

void cmd_experiment(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    const auto& spec = cfg.embodiment;
    if (cfg.corpus.empty()) throw InvalidArgument("experiment needs --corpus");
    if (cfg.inputs.empty()) throw InvalidArgument("experiment needs at least one test input");
    const auto tests = expand_inputs(cfg.inputs);

    const auto table = train_on_corpus(cfg.corpus, cfg);
    log << "trained " << table.solved_count() << " of " << table.class_count() << " classes\n";
    if (!cfg.lut.empty()) write_lut(table, cfg.lut);
    if (!cfg.planes_dir.empty()) fs::create_directories(cfg.planes_dir);

    std::vector<MetricRow> rows;
    for (const auto& test : tests) {
        const Media target = load_media(test, cfg.geometry, cfg.max_frames);
        const Media degraded = degrade_media(target, spec);
        const Media enhanced = enhance_media(degraded, spec);
        const Media repaired = map_luma(enhanced, [&](const LumaPlane& p) {
            return repair_plane(p, table, spec.classifier);
        });
        const auto name = test.stem().string();
        const auto ref = target.luma();

        // Degraded output of the up-scaling chain is quarter size: no metrics.
        std::optional<QualityReport> degraded_report;
        if (!spec.resamples()) degraded_report = evaluate_sequence(ref, degraded.luma(), cfg.ssim);
        rows.push_back({name, "degraded", degraded_report});
        rows.push_back({name, "enhanced", evaluate_sequence(ref, enhanced.luma(), cfg.ssim)});
        rows.push_back({name, "repaired", evaluate_sequence(ref, repaired.luma(), cfg.ssim)});

        if (!cfg.planes_dir.empty()) {
            save_media(degraded, cfg.planes_dir / with_stage(test, "degraded"));
            save_media(enhanced, cfg.planes_dir / with_stage(test, "enhanced"));
            save_media(repaired, cfg.planes_dir / with_stage(test, "repaired"));
        }
    }

    const std::string csv = format_csv(rows);
    if (cfg.out.empty()) {
        out << csv;
    } else {
        write_text_atomic(cfg.out, csv);
    }
}

}  // namespace tfilter
