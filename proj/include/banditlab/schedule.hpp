#pragma once

#include <span>
#include <string>
#include <vector>

namespace banditlab {

enum class ScheduleKind { constant, cold_start, targeted_zero, custom_sequence };

// Produces the adversarial quality q^t per round. The adversary is shown the
// learner's announced distribution p^t, never the realized arm; that is the
// only information the reactive kind (targeted_zero) may use. Constant and
// cold_start are oblivious: their output depends on t alone. Immutable and
// shareable across episode workers.
class QualitySchedule {
 public:
  static QualitySchedule constant(double q0);
  // q^t = 0 for t <= t0, q_after from t0 + 1 on.
  static QualitySchedule cold_start(long long t0, double q_after);
  // q^t = 0 whenever the announced mass on the optimal arm reaches the
  // threshold, q_otherwise otherwise. Threshold 1.0 detects exact point
  // masses (up to 1e-12); lower thresholds probe near-deterministic play.
  static QualitySchedule targeted_zero(double threshold = 1.0, double q_otherwise = 1.0);
  // Explicit list; rounds past the end repeat the last element.
  static QualitySchedule custom_sequence(std::vector<double> qualities);

  double next_quality(long long round, std::span<const double> announced,
                      int optimal_arm) const;

  ScheduleKind kind() const { return kind_; }
  bool oblivious() const { return kind_ != ScheduleKind::targeted_zero; }
  std::string describe() const;

 private:
  QualitySchedule() = default;

  ScheduleKind kind_ = ScheduleKind::constant;
  double q0_ = 1.0;
  long long t0_ = 0;
  double q_after_ = 1.0;
  double threshold_ = 1.0;
  double q_otherwise_ = 1.0;
  std::vector<double> sequence_;
};

}  // namespace banditlab
