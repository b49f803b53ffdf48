// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "mars/domain.hpp"

namespace mars {

// Uniform frame selection over [0, total_frames). Deterministic; no RNG.
struct FrameIndexPlan {
    int total_frames = 0;
    int requested_n = 0;
    std::vector<int> indices;
};

// indices[i] = floor(i * total / n) when total > n; identity otherwise.
// The first index is always 0, so the opening frame is never skipped.
FrameIndexPlan uniform_indices(int total_frames, int n);

struct Frame {
    int source_index = 0;
    std::string mime;
    std::string bytes;
};

struct FrameSet {
    std::string video_id;
    std::vector<Frame> frames;
    // Fewer frames were available than requested; all of them were taken.
    bool short_sample = false;
};

struct SamplerConfig {
    // External extraction tools, discoverable via PATH or absolute paths.
    std::string media_tool = "ffmpeg";
    std::string probe_tool = "ffprobe";
    // Longest edge for frames extracted from video files. Directory frames
    // are served as stored.
    int max_edge = 768;
    int jpeg_quality = 2;
};

// Frame directory: *.jpg/*.png sorted lexicographically define the index
// space. Video file: frame count probed first, then the planned indices are
// extracted by the external tool as JPEG capped at max_edge.
FrameSet load_frames(const VideoRecord& record, int n, const SamplerConfig& config);

// The select-filter expression handed to the media tool; exposed so the
// subprocess contract can be checked against the index plan.
std::string select_filter_expression(const std::vector<int>& indices, int max_edge);

}  // namespace mars
