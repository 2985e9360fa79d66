#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

namespace acceptance {

/// Collects per-check outcomes for one criterion and prints the single
/// pass/fail line the suite is graded on.
class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), t0_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& what) {
    if (!ok) {
      failed_.push_back(what);
      std::printf("  [criterion %d] check failed: %s\n", number_, what.c_str());
    }
    ++total_;
  }

  bool finish() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    std::printf("[criterion %2d] %s: %s (%zu/%zu checks, %.1f s)\n", number_,
                title_.c_str(), failed_.empty() ? "PASS" : "FAIL",
                total_ - failed_.size(), total_, secs);
    std::fflush(stdout);
    return failed_.empty();
  }

 private:
  int number_;
  std::string title_;
  std::vector<std::string> failed_;
  std::size_t total_ = 0;
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace acceptance
