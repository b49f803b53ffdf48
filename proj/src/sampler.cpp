// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#include "mars/sampler.hpp"

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "mars/errors.hpp"
#include "mars/util.hpp"

namespace fs = std::filesystem;

namespace mars {

FrameIndexPlan uniform_indices(int total_frames, int n) {
    if (n <= 0) throw std::invalid_argument("uniform_indices: n must be >= 1");
    if (total_frames < 0) throw std::invalid_argument("uniform_indices: negative frame count");

    FrameIndexPlan plan;
    plan.total_frames = total_frames;
    plan.requested_n = n;
    if (total_frames <= n) {
        plan.indices.resize(static_cast<std::size_t>(total_frames));
        for (int i = 0; i < total_frames; ++i) plan.indices[static_cast<std::size_t>(i)] = i;
        return plan;
    }
    plan.indices.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        plan.indices.push_back(static_cast<int>(
            static_cast<long long>(i) * total_frames / n));
    }
    return plan;
}

namespace {

bool has_image_extension(const fs::path& p) {
    const std::string ext = util::to_lower(p.extension().string());
    return ext == ".jpg" || ext == ".jpeg" || ext == ".png";
}

FrameSet load_from_directory(const VideoRecord& record, int n) {
    const fs::path dir(record.media_path);
    if (!fs::is_directory(dir)) {
        throw MediaError("frames directory not found: " + dir.string());
    }

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && has_image_extension(entry.path())) {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw MediaError("zero frames found in directory: " + dir.string());
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    const FrameIndexPlan plan = uniform_indices(static_cast<int>(files.size()), n);

    FrameSet set;
    set.video_id = record.id;
    set.short_sample = static_cast<int>(files.size()) < n;
    for (int idx : plan.indices) {
        Frame frame;
        frame.source_index = idx;
        frame.bytes = util::read_text_file(files[static_cast<std::size_t>(idx)]);
        frame.mime = util::sniff_image_mime(frame.bytes);
        if (frame.mime.empty()) {
            throw MediaError("not a decodable image: " +
                             files[static_cast<std::size_t>(idx)].string());
        }
        set.frames.push_back(std::move(frame));
    }
    return set;
}

int probe_frame_count(const VideoRecord& record, const SamplerConfig& config) {
    const std::vector<std::string> argv = {
        config.probe_tool, "-v", "error", "-select_streams", "v:0", "-count_packets",
        "-show_entries", "stream=nb_read_packets", "-of",
        "default=nokey=1:noprint_wrappers=1", record.media_path};
    util::CommandResult res;
    try {
        res = util::run_command(argv);
    } catch (const Error& e) {
        throw MediaError("frame probe failed for " + record.media_path + ": " + e.what());
    }
    if (res.exit_code != 0) {
        throw MediaError("frame probe exited with code " + std::to_string(res.exit_code) +
                             " for " + record.media_path + ": " + util::trim(res.err),
                         res.exit_code);
    }
    const std::string text = util::trim(res.out);
    int count = 0;
    try {
        count = std::stoi(text);
    } catch (const std::exception&) {
        throw MediaError("frame probe produced no frame count for " + record.media_path +
                         " (got \"" + text + "\")");
    }
    if (count <= 0) {
        throw MediaError("zero frames found in video: " + record.media_path);
    }
    return count;
}

fs::path make_extract_dir() {
    static std::atomic<std::uint64_t> counter{0};
    const fs::path dir = fs::temp_directory_path() /
                         ("mars-frames-" + std::to_string(::getpid()) + "-" +
                          std::to_string(counter.fetch_add(1)));
    fs::create_directories(dir);
    return dir;
}

FrameSet load_from_video(const VideoRecord& record, int n, const SamplerConfig& config) {
    if (!fs::exists(record.media_path)) {
        throw MediaError("video file not found: " + record.media_path);
    }
    const int total = probe_frame_count(record, config);
    const FrameIndexPlan plan = uniform_indices(total, n);

    const fs::path out_dir = make_extract_dir();
    const std::string pattern = (out_dir / "frame_%06d.jpg").string();
    const std::vector<std::string> argv = {
        config.media_tool,
        "-hide_banner",
        "-loglevel",
        "error",
        "-i",
        record.media_path,
        "-vf",
        select_filter_expression(plan.indices, config.max_edge),
        "-vsync",
        "0",
        "-q:v",
        std::to_string(config.jpeg_quality),
        pattern,
    };

    util::CommandResult res;
    try {
        res = util::run_command(argv);
    } catch (const Error& e) {
        fs::remove_all(out_dir);
        throw MediaError("frame extraction failed for " + record.media_path + ": " + e.what());
    }
    if (res.exit_code != 0) {
        fs::remove_all(out_dir);
        throw MediaError("frame extraction exited with code " + std::to_string(res.exit_code) +
                             " for " + record.media_path + ": " + util::trim(res.err),
                         res.exit_code);
    }

    FrameSet set;
    set.video_id = record.id;
    set.short_sample = total < n;
    char name[64];
    for (std::size_t i = 0; i < plan.indices.size(); ++i) {
        // The tool numbers emitted frames 1..k in select order.
        std::snprintf(name, sizeof(name), "frame_%06d.jpg", static_cast<int>(i) + 1);
        const fs::path frame_path = out_dir / name;
        if (!fs::exists(frame_path)) {
            fs::remove_all(out_dir);
            throw MediaError("extraction produced fewer frames than planned for " +
                             record.media_path + " (missing " + std::string(name) + ")");
        }
        Frame frame;
        frame.source_index = plan.indices[i];
        frame.bytes = util::read_text_file(frame_path);
        frame.mime = util::sniff_image_mime(frame.bytes);
        if (frame.mime.empty()) {
            fs::remove_all(out_dir);
            throw MediaError("extracted frame is not a decodable image: " + frame_path.string());
        }
        set.frames.push_back(std::move(frame));
    }
    fs::remove_all(out_dir);
    return set;
}

}  // namespace

std::string select_filter_expression(const std::vector<int>& indices, int max_edge) {
    std::ostringstream expr;
    expr << "select='";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) expr << "+";
        expr << "eq(n," << indices[i] << ")";
    }
    expr << "'";
    if (max_edge > 0) {
        expr << ",scale=" << max_edge << ":" << max_edge
             << ":force_original_aspect_ratio=decrease";
    }
    return expr.str();
}

FrameSet load_frames(const VideoRecord& record, int n, const SamplerConfig& config) {
    if (n <= 0) throw std::invalid_argument("load_frames: n must be >= 1");
    if (record.media_kind == MediaKind::frames_dir) {
        return load_from_directory(record, n);
    }
    return load_from_video(record, n, config);
}

}  // namespace mars
