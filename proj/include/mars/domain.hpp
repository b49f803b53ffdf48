// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mars {

/// Binary classification target: hate = 1, nonhate = 0.
enum class BinaryLabel : int { nonhate = 0, hate = 1 };

int label_to_int(BinaryLabel label);
BinaryLabel label_from_int(int value);  // throws LabelError unless value is 0 or 1

enum class MediaKind { video_file, frames_dir };

// One dataset item. Exactly one media source: a video file to sample from,
// or a directory of pre-extracted frames. Transcript may be empty.
struct VideoRecord {
    std::string id;
    MediaKind media_kind = MediaKind::frames_dir;
    std::string media_path;
    std::string transcript;
    std::string gold_label;
    std::string language = "en";

    bool operator==(const VideoRecord&) const = default;
};

struct DatasetManifest {
    std::vector<VideoRecord> records;
    std::string source_path;
};

// Line-delimited JSON, one record per line:
//   {"id": ..., "video_path" XOR "frames_dir": ..., "transcript": "", "label": ..., "lang": "en"}
// Blank lines are skipped. Errors name the offending line number.
DatasetManifest load_manifest(const std::filesystem::path& path);
void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

// Raw-label vocabularies. MHC folds "offensive" into the hate category;
// HateMM is already binary.
enum class LabelScheme { hatemm, mhc };

LabelScheme scheme_from_name(std::string_view name);
std::string scheme_name(LabelScheme scheme);

// Case-insensitive over the scheme's vocabulary; unknown labels are hard
// errors rather than a silent 0.
BinaryLabel merge_labels(std::string_view raw, LabelScheme scheme);

}  // namespace mars
