#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mjmcmc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table schedule was asked for an iteration past its last entry.
class ScheduleExhausted : public Error {
 public:
  ScheduleExhausted(std::size_t iteration, std::size_t length)
      : Error("epsilon schedule exhausted: iteration " + std::to_string(iteration) +
              " requested but table has " + std::to_string(length) + " entries"),
        iteration_(iteration) {}
  std::size_t iteration() const noexcept { return iteration_; }

 private:
  std::size_t iteration_;
};

/// A posterior model returned a non-finite log ratio (or failed) for element `index`.
class ModelEvaluationError : public Error {
 public:
  static constexpr std::size_t kNoIteration = static_cast<std::size_t>(-1);

  ModelEvaluationError(std::size_t index, const std::string& what,
                       std::size_t iteration = kNoIteration)
      : Error(compose(index, what, iteration)), index_(index), iteration_(iteration), detail_(what) {}

  std::size_t index() const noexcept { return index_; }
  std::size_t iteration() const noexcept { return iteration_; }
  const std::string& detail() const noexcept { return detail_; }

  ModelEvaluationError at_iteration(std::size_t iteration) const {
    return ModelEvaluationError(index_, detail_, iteration);
  }

 private:
  static std::string compose(std::size_t index, const std::string& what, std::size_t iteration) {
    std::string msg = "model evaluation failed at element " + std::to_string(index);
    if (iteration != kNoIteration) msg += " (iteration " + std::to_string(iteration) + ")";
    return msg + ": " + what;
  }

  std::size_t index_;
  std::size_t iteration_;
  std::string detail_;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Neighbour set too large (or singular) for the Gaussian node marginal.
class IllConditionedMarginal : public Error {
 public:
  IllConditionedMarginal(std::size_t node, std::size_t neighbours, const std::string& why)
      : Error("ill-conditioned node marginal for node " + std::to_string(node) + " with " +
              std::to_string(neighbours) + " neighbours: " + why),
        node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

/// Logistic regression did not converge (typically separation).
class FitError : public Error {
 public:
  FitError(std::size_t node, const std::string& why)
      : Error("logistic fit failed for node " + std::to_string(node) + ": " + why), node_(node) {}
  std::size_t node() const noexcept { return node_; }

 private:
  std::size_t node_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string path, std::size_t row, std::size_t column, const std::string& why)
      : Error(path + ":" + std::to_string(row) + ":" + std::to_string(column) + ": " + why),
        row_(row), column_(column) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mjmcmc
