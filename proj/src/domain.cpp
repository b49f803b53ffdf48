// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#include "mars/domain.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mars/errors.hpp"
#include "mars/util.hpp"

namespace mars {

using nlohmann::json;
using nlohmann::ordered_json;

int label_to_int(BinaryLabel label) { return static_cast<int>(label); }

BinaryLabel label_from_int(int value) {
    if (value == 0) return BinaryLabel::nonhate;
    if (value == 1) return BinaryLabel::hate;
    throw LabelError("binary label must be 0 or 1, got " + std::to_string(value));
}

namespace {

VideoRecord record_from_json(const json& j, std::size_t line_no, const std::string& file) {
    const auto fail = [&](const std::string& why) {
        throw ManifestError(file + ":" + std::to_string(line_no) + ": " + why);
    };
    if (!j.is_object()) fail("expected a JSON object");

    VideoRecord rec;
    if (!j.contains("id") || !j["id"].is_string()) fail("missing required string field \"id\"");
    rec.id = j["id"].get<std::string>();
    if (rec.id.empty()) fail("\"id\" must be nonempty");

    const bool has_video = j.contains("video_path");
    const bool has_frames = j.contains("frames_dir");
    if (has_video == has_frames) {
        fail("exactly one of \"video_path\" or \"frames_dir\" is required");
    }
    if (has_video) {
        if (!j["video_path"].is_string()) fail("\"video_path\" must be a string");
        rec.media_kind = MediaKind::video_file;
        rec.media_path = j["video_path"].get<std::string>();
    } else {
        if (!j["frames_dir"].is_string()) fail("\"frames_dir\" must be a string");
        rec.media_kind = MediaKind::frames_dir;
        rec.media_path = j["frames_dir"].get<std::string>();
    }
    if (rec.media_path.empty()) fail("media path must be nonempty");

    if (!j.contains("label") || !j["label"].is_string()) {
        fail("missing required string field \"label\"");
    }
    rec.gold_label = j["label"].get<std::string>();

    if (j.contains("transcript")) {
        if (!j["transcript"].is_string()) fail("\"transcript\" must be a string");
        rec.transcript = j["transcript"].get<std::string>();
    }
    if (j.contains("lang")) {
        if (!j["lang"].is_string()) fail("\"lang\" must be a string");
        rec.language = j["lang"].get<std::string>();
    }
    return rec;
}

}  // namespace

DatasetManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ManifestError("manifest file not found: " + path.string());

    DatasetManifest manifest;
    manifest.source_path = path.string();

    std::set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (util::trim(line).empty()) continue;
        const json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded()) {
            throw ManifestError(path.string() + ":" + std::to_string(line_no) +
                                ": malformed JSON");
        }
        VideoRecord rec = record_from_json(j, line_no, path.string());
        if (!seen_ids.insert(rec.id).second) {
            throw ManifestError(path.string() + ":" + std::to_string(line_no) +
                                ": duplicate id \"" + rec.id + "\"");
        }
        manifest.records.push_back(std::move(rec));
    }
    return manifest;
}

void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
    std::ostringstream out;
    for (const auto& rec : manifest.records) {
        ordered_json j;
        j["id"] = rec.id;
        if (rec.media_kind == MediaKind::video_file) {
            j["video_path"] = rec.media_path;
        } else {
            j["frames_dir"] = rec.media_path;
        }
        j["transcript"] = rec.transcript;
        j["label"] = rec.gold_label;
        j["lang"] = rec.language;
        out << j.dump() << "\n";
    }
    util::write_text_file_atomic(path, out.str());
}

LabelScheme scheme_from_name(std::string_view name) {
    const std::string n = util::to_lower(name);
    if (n == "hatemm") return LabelScheme::hatemm;
    if (n == "mhc") return LabelScheme::mhc;
    throw ConfigError("unknown label scheme: " + std::string(name));
}

std::string scheme_name(LabelScheme scheme) {
    return scheme == LabelScheme::hatemm ? "hatemm" : "mhc";
}

BinaryLabel merge_labels(std::string_view raw, LabelScheme scheme) {
    const std::string label = util::to_lower(util::trim(raw));
    switch (scheme) {
        case LabelScheme::hatemm:
            if (label == "hate" || label == "hateful") return BinaryLabel::hate;
            if (label == "non-hate" || label == "non hate" || label == "non-hateful") {
                return BinaryLabel::nonhate;
            }
            break;
        case LabelScheme::mhc:
            // Hate and offensive merge into the single hate category.
            if (label == "hate" || label == "hateful" || label == "offensive") {
                return BinaryLabel::hate;
            }
            if (label == "normal") return BinaryLabel::nonhate;
            break;
    }
    throw LabelError("unknown label \"" + std::string(raw) + "\" for scheme " +
                     scheme_name(scheme));
}

}  // namespace mars
