#pragma once

#include <stdexcept>
#include <string>

namespace ww {

// Surface turnover guard: min |1 + W_alpha| dipped below the configured floor.
// The run must halt and checkpoint.
class ChordArcViolation : public std::runtime_error {
 public:
  ChordArcViolation(double min_value, double time)
      : std::runtime_error("chord-arc violation: min|1+W_alpha| = " +
                           std::to_string(min_value) + " at t = " +
                           std::to_string(time)),
        min_value(min_value),
        time(time) {}
  double min_value;
  double time;
};

class NaNDetected : public std::runtime_error {
 public:
  explicit NaNDetected(double time)
      : std::runtime_error("non-finite state at t = " + std::to_string(time)),
        time(time) {}
  double time;
};

class InfeasibleData : public std::runtime_error {
 public:
  explicit InfeasibleData(const std::string& what) : std::runtime_error(what) {}
};

class DomainOverflow : public std::runtime_error {
 public:
  explicit DomainOverflow(const std::string& what) : std::runtime_error(what) {}
};

class ProfileUnstable : public std::runtime_error {
 public:
  explicit ProfileUnstable(const std::string& what) : std::runtime_error(what) {}
};

class ConfigRefused : public std::runtime_error {
 public:
  explicit ConfigRefused(const std::string& reason)
      : std::runtime_error(reason) {}
};

}  // namespace ww
