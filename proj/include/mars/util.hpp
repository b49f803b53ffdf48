// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mars::util {

// 64-bit FNV-1a. Used for prompt version hashes and deterministic mock content.
std::uint64_t fnv1a64(std::string_view data, std::uint64_t basis = 14695981039346656037ULL);
std::string hex64(std::uint64_t value);

std::string base64_encode(std::string_view data);

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Path component encoding that keeps [A-Za-z0-9._-] and percent-encodes the
// rest; injective, so distinct ids never collide on disk.
std::string sanitize_component(std::string_view s);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);
// Temp file + rename in the target directory; readers never see partial content.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string utc_timestamp();

bool looks_like_png(std::string_view bytes);
bool looks_like_jpeg(std::string_view bytes);
// "image/png", "image/jpeg", or "" when the payload is not a known image.
std::string sniff_image_mime(std::string_view bytes);

struct CommandResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// fork/exec without a shell; argv[0] is resolved via PATH.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace mars::util
