#include "banditlab/schedule.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace banditlab {

namespace {

void require_quality(double q, const char* what) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
  }
}

void require_simplex(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) {
      throw std::invalid_argument("announced distribution has a negative entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("announced distribution does not sum to 1");
  }
}

}  // namespace

QualitySchedule QualitySchedule::constant(double q0) {
  require_quality(q0, "constant quality");
  QualitySchedule s;
  s.kind_ = ScheduleKind::constant;
  s.q0_ = q0;
  return s;
}

QualitySchedule QualitySchedule::cold_start(long long t0, double q_after) {
  if (t0 < 0) {
    throw std::invalid_argument("cold_start t0 must be non-negative");
  }
  require_quality(q_after, "cold_start q_after");
  QualitySchedule s;
  s.kind_ = ScheduleKind::cold_start;
  s.t0_ = t0;
  s.q_after_ = q_after;
  return s;
}

QualitySchedule QualitySchedule::targeted_zero(double threshold, double q_otherwise) {
  if (!(threshold > 0.5 && threshold <= 1.0)) {
    throw std::invalid_argument("targeted_zero threshold must lie in (0.5, 1]");
  }
  require_quality(q_otherwise, "targeted_zero q_otherwise");
  QualitySchedule s;
  s.kind_ = ScheduleKind::targeted_zero;
  s.threshold_ = threshold;
  s.q_otherwise_ = q_otherwise;
  return s;
}

QualitySchedule QualitySchedule::custom_sequence(std::vector<double> qualities) {
  if (qualities.empty()) {
    throw std::invalid_argument("custom_sequence needs at least one quality");
  }
  for (double q : qualities) {
    require_quality(q, "custom_sequence quality");
  }
  QualitySchedule s;
  s.kind_ = ScheduleKind::custom_sequence;
  s.sequence_ = std::move(qualities);
  return s;
}

double QualitySchedule::next_quality(long long round, std::span<const double> announced,
                                     int optimal_arm) const {
  if (round < 1) {
    throw std::invalid_argument("rounds are 1-based");
  }
  require_simplex(announced);
  switch (kind_) {
    case ScheduleKind::constant:
      return q0_;
    case ScheduleKind::cold_start:
      return round <= t0_ ? 0.0 : q_after_;
    case ScheduleKind::targeted_zero: {
      if (optimal_arm < 0 || static_cast<std::size_t>(optimal_arm) >= announced.size()) {
        throw std::invalid_argument("optimal arm index out of range");
      }
      // Exact point masses must trigger at threshold 1.0.
      return announced[static_cast<std::size_t>(optimal_arm)] >= threshold_ - 1e-12
                 ? 0.0
                 : q_otherwise_;
    }
    case ScheduleKind::custom_sequence: {
      const std::size_t i = static_cast<std::size_t>(round - 1);
      return i < sequence_.size() ? sequence_[i] : sequence_.back();
    }
  }
  throw std::logic_error("unreachable schedule kind");
}

std::string QualitySchedule::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case ScheduleKind::constant:
      os << "constant(" << q0_ << ")";
      break;
    case ScheduleKind::cold_start:
      os << "cold_start(" << t0_ << ", " << q_after_ << ")";
      break;
    case ScheduleKind::targeted_zero:
      os << "targeted_zero(" << threshold_ << ", " << q_otherwise_ << ")";
      break;
    case ScheduleKind::custom_sequence:
      os << "custom_sequence[" << sequence_.size() << " rounds]";
      break;
  }
  return os.str();
}

}  // namespace banditlab
