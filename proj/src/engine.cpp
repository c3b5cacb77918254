#include "flatkit/engine.hpp"

namespace flatkit {

std::string to_string(LimitKind kind) {
  switch (kind) {
    case LimitKind::Degree: return "max-degree";
    case LimitKind::BasisSize: return "max-basis";
    case LimitKind::PairQueue: return "max-pairs";
    case LimitKind::Time: return "timeout";
  }
  return "unknown";
}

ResourceExceeded::ResourceExceeded(LimitKind kind, const std::string& detail)
    : std::runtime_error("resource limit exceeded (" + to_string(kind) + "): " + detail),
      kind_(kind) {}

Engine::Engine(ResourceLimits limits)
    : limits_(limits), started_(Clock::now()), deadline_(started_ + limits.time_budget) {}

std::chrono::milliseconds Engine::elapsed() const {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started_);
}

void Engine::check_deadline() const {
  if (Clock::now() > deadline_)
    throw ResourceExceeded(LimitKind::Time,
                           "budget of " + std::to_string(limits_.time_budget.count()) + " ms used up");
}

}  // namespace flatkit
