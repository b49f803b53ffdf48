// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace mars {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Manifest ingestion problems: missing file, malformed line, duplicate id.
class ManifestError : public Error {
public:
    using Error::Error;
};

// Unknown raw label for the requested scheme.
class LabelError : public Error {
public:
    using Error::Error;
};

// Frame loading failures: unreadable media, zero frames, tool failures.
class MediaError : public Error {
public:
    MediaError(const std::string& msg, int tool_exit_code = 0)
        : Error(msg), tool_exit_code(tool_exit_code) {}
    int tool_exit_code;
};

class ProviderError : public Error {
public:
    ProviderError(const std::string& msg, int last_status = 0, int attempts = 0,
                  bool retries_exhausted = false)
        : Error(msg),
          last_status(last_status),
          attempts(attempts),
          retries_exhausted(retries_exhausted) {}
    int last_status;
    int attempts;
    bool retries_exhausted;
};

// Same key written with different content; never silently overwritten.
class StoreConflictError : public Error {
public:
    using Error::Error;
};

// Record exists on disk but cannot be read back; message names the file.
class StoreIntegrityError : public Error {
public:
    StoreIntegrityError(const std::string& msg, std::string path)
        : Error(msg), path(std::move(path)) {}
    std::string path;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace mars
