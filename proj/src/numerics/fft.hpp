// Copyright 2026 The catgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>

namespace catgate::detail {

/// fftw_malloc'd complex buffer.
class FftBuffer {
 public:
  explicit FftBuffer(std::size_t n)
      : n_(n), data_(fftw_alloc_complex(n), &fftw_free) {
    if (!data_) throw std::bad_alloc();
  }
  std::size_t size() const noexcept { return n_; }
  fftw_complex* raw() noexcept { return data_.get(); }
  std::span<std::complex<double>> view() noexcept {
    return {reinterpret_cast<std::complex<double>*>(data_.get()), n_};
  }

 private:
  std::size_t n_;
  std::unique_ptr<fftw_complex, decltype(&fftw_free)> data_;
};

/// In-place 1-D complex DFT plan. Planning is serialized (the FFTW planner is
/// not thread-safe); execute() may be called concurrently on distinct buffers
/// of the planned length.
class FftPlan {
 public:
  enum class Direction { Forward = FFTW_FORWARD, Backward = FFTW_BACKWARD };

  FftPlan(std::size_t n, Direction dir) : n_(n) {
    FftBuffer scratch(n);
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_ = fftw_plan_dft_1d(static_cast<int>(n), scratch.raw(), scratch.raw(),
                             static_cast<int>(dir), FFTW_ESTIMATE);
    if (plan_ == nullptr) throw std::runtime_error("FFTW planning failed");
  }
  ~FftPlan() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_);
  }
  FftPlan(const FftPlan&) = delete;
  FftPlan& operator=(const FftPlan&) = delete;

  std::size_t size() const noexcept { return n_; }
  void execute(FftBuffer& buf) const { fftw_execute_dft(plan_, buf.raw(), buf.raw()); }

 private:
  static std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
  }
  std::size_t n_;
  fftw_plan plan_ = nullptr;
};

}  // namespace catgate::detail
