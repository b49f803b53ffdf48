// Copyright (C) 2026 MARS Contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace mars {

// Time source used by retry backoff and the rate limiter, virtualized so
// timing behavior is testable without real sleeps.
class Clock {
public:
    virtual ~Clock() = default;
    virtual std::chrono::steady_clock::time_point now() = 0;
    virtual void sleep_for(std::chrono::milliseconds d) = 0;
};

class SystemClock final : public Clock {
public:
    std::chrono::steady_clock::time_point now() override {
        return std::chrono::steady_clock::now();
    }
    void sleep_for(std::chrono::milliseconds d) override { std::this_thread::sleep_for(d); }
};

// Advances only when someone sleeps; records every sleep it granted.
class ManualClock final : public Clock {
public:
    std::chrono::steady_clock::time_point now() override {
        std::lock_guard<std::mutex> lock(mu_);
        return t_;
    }
    void sleep_for(std::chrono::milliseconds d) override {
        std::lock_guard<std::mutex> lock(mu_);
        t_ += d;
        sleeps_.push_back(d);
    }
    void advance(std::chrono::milliseconds d) {
        std::lock_guard<std::mutex> lock(mu_);
        t_ += d;
    }
    std::vector<std::chrono::milliseconds> sleeps() const {
        std::lock_guard<std::mutex> lock(mu_);
        return sleeps_;
    }

private:
    mutable std::mutex mu_;
    std::chrono::steady_clock::time_point t_{};
    std::vector<std::chrono::milliseconds> sleeps_;
};

std::shared_ptr<Clock> system_clock_instance();

}  // namespace mars
