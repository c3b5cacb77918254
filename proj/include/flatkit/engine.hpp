#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace flatkit {

/// Caps on a Groebner computation. Hitting any of them aborts with
/// ResourceExceeded; a partial result is never returned as an answer.
struct ResourceLimits {
  unsigned max_degree = 40;
  std::size_t max_basis = 5000;
  std::size_t max_pairs = 200000;
  std::chrono::milliseconds time_budget{60000};
};

enum class LimitKind { Degree, BasisSize, PairQueue, Time };

std::string to_string(LimitKind kind);

class ResourceExceeded : public std::runtime_error {
 public:
  ResourceExceeded(LimitKind kind, const std::string& detail);
  LimitKind kind() const noexcept { return kind_; }

 private:
  LimitKind kind_;
};

/// An engine-produced certificate failed its own re-verification.
class CertificateFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Counters accumulated across Groebner runs. All values are deterministic
/// for a fixed input.
struct EngineStats {
  std::uint64_t groebner_runs = 0;
  std::uint64_t pairs_created = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t product_criterion_skips = 0;
  std::uint64_t chain_criterion_skips = 0;
  std::uint64_t largest_basis = 0;
  std::uint64_t largest_degree = 0;
};

/// Limits plus one wall-clock deadline shared by every call that receives
/// this engine. Not thread-safe: give each concurrent task its own Engine.
class Engine {
 public:
  using Clock = std::chrono::steady_clock;

  explicit Engine(ResourceLimits limits = {});

  const ResourceLimits& limits() const noexcept { return limits_; }
  EngineStats& stats() const noexcept { return stats_; }
  Clock::time_point started() const noexcept { return started_; }
  std::chrono::milliseconds elapsed() const;

  void check_deadline() const;

 private:
  ResourceLimits limits_;
  Clock::time_point started_;
  Clock::time_point deadline_;
  mutable EngineStats stats_;
};

}  // namespace flatkit
