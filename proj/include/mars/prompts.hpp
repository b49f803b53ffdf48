// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace mars {

// The full template set for every strategy. Templates are plain text with
// {placeholder} slots; the version hash is folded into every run key so a
// prompt edit invalidates cached stage records.
struct PromptSet {
    std::string objective;
    std::string hate_hypothesis;
    std::string nonhate_hypothesis;
    std::string meta_synthesis;
    std::string simple;
    std::string cot_modality;
    std::string cot_integrate;
    std::string neutral_analysis;

    std::string version_hash() const;

    static PromptSet builtin();
    // Reads one .txt file per template from a directory (objective.txt, ...).
    static PromptSet load_dir(const std::filesystem::path& dir);
    void write_dir(const std::filesystem::path& dir) const;

    bool operator==(const PromptSet&) const = default;
};

// Placeholder names the renderer recognizes. Unknown {words} and literal
// JSON braces in template text pass through untouched.
const std::vector<std::string>& template_placeholders();

// Single-pass substitution. A recognized placeholder present in the template
// but absent from `values` is an error; substituted values are never
// re-scanned, so model- or user-supplied text cannot inject further slots.
std::string render_template(const std::string& tmpl,
                            const std::map<std::string, std::string>& values);

// Inserted for {transcript} when a record has no transcript, so the model is
// told explicitly instead of receiving a silently blank section.
inline constexpr const char* kEmptyTranscriptMarker = "(no transcript available)";
// Inserted for {obj} when the objective stage is disabled.
inline constexpr const char* kNoObjectiveMarker = "(no objective description was generated)";

}  // namespace mars
