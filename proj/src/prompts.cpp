// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#include "mars/prompts.hpp"

#include <array>

#include "mars/errors.hpp"
#include "mars/util.hpp"

namespace mars {

namespace {

constexpr const char* kObjective = R"(You are assisting a content moderation review. You are given frames sampled uniformly from a video, together with its speech transcript.

Describe the video content objectively. State only what is visibly shown and what is said: people, actions, settings, on-screen text, symbols, and spoken statements. Do not interpret intent, do not speculate, and do not judge whether anything is hateful.

Transcript:
{transcript}

Respond with a single JSON object:
{"description": "<factual description of the visual and spoken content>"}
)";

constexpr const char* kHateHypothesis = R"(You are assisting a content moderation review. You are given frames sampled uniformly from a video and its speech transcript.

Work under the assumption that the content contains hate speech. Build the strongest case supporting that assumption. Hateful or offensive material includes group-based discriminatory language, dehumanizing symbols, slurs, and identity-based attacks on protected groups. Identify every cue in the frames or transcript that supports the assumption and explain how it does.

Transcript:
{transcript}

Respond with a single JSON object:
{"evidence": "<the specific visual or spoken cues you found>", "reasoning": "<why these cues support the hate-speech assumption>", "confidence": <number between 0 and 1>}
)";

constexpr const char* kNonhateHypothesis = R"(You are assisting a content moderation review. You are given frames sampled uniformly from a video and its speech transcript.

Work under the assumption that the content does not constitute hate speech. Build the strongest case supporting that assumption. Distinguish personal disputes from group targeting, and consider contextual factors such as satire, artistic usage, reporting or commentary, and the absence of discriminatory language patterns. Identify every cue in the frames or transcript that supports the assumption and explain how it does.

Transcript:
{transcript}

Respond with a single JSON object:
{"evidence": "<the specific visual or spoken cues you found>", "reasoning": "<why these cues support the non-hate assumption>", "confidence": <number between 0 and 1>}
)";

constexpr const char* kMetaSynthesis = R"(You are the senior reviewer in a content moderation workflow. A video was analyzed by independent analysts. You are given the sampled frames, the transcript, an objective description of the content, and the analyst reports.

Objective description:
{obj}

{hate_report}

{nonhate_report}

Transcript:
{transcript}

Weigh the competing hypotheses against each other: evaluate the strength of each side's evidence, its contextual relevance, and the potential harm of the content. Decide whether the video is hateful.

Respond with a single JSON object:
{"label": "hateful" or "non-hateful", "confidence": <number between 0 and 1>, "key_factors": ["<short decisive factor>", "..."], "rationale": "<how the evidence was weighed to reach the decision>"}
)";

constexpr const char* kSimple = R"(You are given frames sampled uniformly from a video and its speech transcript. Decide whether the video contains hateful content. Hateful content expresses hatred toward a protected group through discriminatory language, dehumanizing symbols, or identity-based attacks.

Transcript:
{transcript}

Respond with a single JSON object:
{"label": "hateful" or "non-hateful", "confidence": <number between 0 and 1>, "key_factors": ["<short factor>", "..."], "rationale": "<one-sentence justification>"}
)";

constexpr const char* kCotModality = R"(You are analyzing one modality of a video as part of a step-by-step review. Think step by step: list what the content presents, note any references to groups, slurs, symbols, or targets, and describe the overall tone. Do not give a final hateful or non-hateful verdict yet.

Transcript (empty when this pass covers the frames only):
{transcript}

Respond with a single JSON object:
{"description": "<your step-by-step analysis of this modality>"}
)";

constexpr const char* kCotIntegrate = R"(You are completing a step-by-step review of a video. Two independent analyses were produced, one from the video frames and one from the transcript. Integrate the multimodal information, thinking step by step, and output the final judgment.

Frame analysis:
{frames_analysis}

Transcript analysis:
{transcript_analysis}

Transcript:
{transcript}

Respond with a single JSON object:
{"label": "hateful" or "non-hateful", "confidence": <number between 0 and 1>, "key_factors": ["<short decisive factor>", "..."], "rationale": "<your integrated reasoning>"}
)";

constexpr const char* kNeutralAnalysis = R"(You are assisting a content moderation review. You are given frames sampled uniformly from a video and its speech transcript.

Without assuming any conclusion, collect the evidence relevant to deciding whether the video is hateful. Note cues that could indicate hateful content (group-based discriminatory language, dehumanizing symbols, identity-based attacks) and cues that could indicate non-hateful content (satire, artistic usage, personal disputes without group targeting, absence of discriminatory patterns).

Transcript:
{transcript}

Respond with a single JSON object:
{"evidence": "<the relevant cues on both sides>", "reasoning": "<how the cues bear on the decision>", "confidence": <number between 0 and 1 expressing how conclusive the evidence is>}
)";

struct TemplateField {
    const char* file;
    std::string PromptSet::* member;
};

const std::array<TemplateField, 8>& template_fields() {
    static const std::array<TemplateField, 8> fields = {{
        {"objective.txt", &PromptSet::objective},
        {"hate_hypothesis.txt", &PromptSet::hate_hypothesis},
        {"nonhate_hypothesis.txt", &PromptSet::nonhate_hypothesis},
        {"meta_synthesis.txt", &PromptSet::meta_synthesis},
        {"simple.txt", &PromptSet::simple},
        {"cot_modality.txt", &PromptSet::cot_modality},
        {"cot_integrate.txt", &PromptSet::cot_integrate},
        {"neutral_analysis.txt", &PromptSet::neutral_analysis},
    }};
    return fields;
}

}  // namespace

PromptSet PromptSet::builtin() {
    PromptSet p;
    p.objective = kObjective;
    p.hate_hypothesis = kHateHypothesis;
    p.nonhate_hypothesis = kNonhateHypothesis;
    p.meta_synthesis = kMetaSynthesis;
    p.simple = kSimple;
    p.cot_modality = kCotModality;
    p.cot_integrate = kCotIntegrate;
    p.neutral_analysis = kNeutralAnalysis;
    return p;
}

std::string PromptSet::version_hash() const {
    std::uint64_t h = 14695981039346656037ULL;
    for (const auto& field : template_fields()) {
        h = util::fnv1a64(field.file, h);
        h = util::fnv1a64(this->*(field.member), h);
    }
    return util::hex64(h);
}

PromptSet PromptSet::load_dir(const std::filesystem::path& dir) {
    PromptSet p;
    for (const auto& field : template_fields()) {
        const auto path = dir / field.file;
        if (!std::filesystem::exists(path)) {
            throw ConfigError("prompt template missing: " + path.string());
        }
        p.*(field.member) = util::read_text_file(path);
    }
    return p;
}

void PromptSet::write_dir(const std::filesystem::path& dir) const {
    for (const auto& field : template_fields()) {
        util::write_text_file(dir / field.file, this->*(field.member));
    }
}

const std::vector<std::string>& template_placeholders() {
    static const std::vector<std::string> names = {
        "transcript", "obj", "hate_report", "nonhate_report",
        "frames_analysis", "transcript_analysis",
    };
    return names;
}

std::string render_template(const std::string& tmpl,
                            const std::map<std::string, std::string>& values) {
    for (const auto& [key, _] : values) {
        bool known = false;
        for (const auto& name : template_placeholders()) {
            if (name == key) known = true;
        }
        if (!known) throw ConfigError("render_template: unknown placeholder {" + key + "}");
    }

    std::string out;
    out.reserve(tmpl.size());
    std::size_t pos = 0;
    while (pos < tmpl.size()) {
        const std::size_t open = tmpl.find('{', pos);
        if (open == std::string::npos) {
            out.append(tmpl, pos, std::string::npos);
            break;
        }
        out.append(tmpl, pos, open - pos);
        const std::size_t close = tmpl.find('}', open + 1);
        bool replaced = false;
        if (close != std::string::npos) {
            const std::string token = tmpl.substr(open + 1, close - open - 1);
            for (const auto& name : template_placeholders()) {
                if (token != name) continue;
                const auto it = values.find(token);
                if (it == values.end()) {
                    throw ConfigError("render_template: template uses {" + token +
                                      "} but no value was supplied");
                }
                out.append(it->second);
                pos = close + 1;
                replaced = true;
                break;
            }
        }
        if (!replaced) {
            out.push_back('{');
            pos = open + 1;
        }
    }
    return out;
}

}  // namespace mars
