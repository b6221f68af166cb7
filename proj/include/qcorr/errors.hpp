#pragma once

#include <stdexcept>
#include <string>

namespace qcorr {

// Input of the wrong shape: unsupported matrix dimension, mismatched operands.
class DimensionError : public std::invalid_argument {
public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Matrix failed the Hermiticity gate; carries the measured asymmetry
// max_ij |m(i,j) - conj(m(j,i))|.
class NotHermitianError : public std::invalid_argument {
public:
  NotHermitianError(const std::string& what, double asymmetry)
      : std::invalid_argument(what), asymmetry_(asymmetry) {}
  double asymmetry() const noexcept { return asymmetry_; }

private:
  double asymmetry_;
};

// Matrix is not a valid density operator (negative eigenvalue, wrong trace).
// offending_eigenvalue() holds the eigenvalue that broke positivity, or the
// measured trace when the trace test failed.
class UnphysicalStateError : public std::invalid_argument {
public:
  UnphysicalStateError(const std::string& what, double offending_value)
      : std::invalid_argument(what), offending_(offending_value) {}
  double offending_eigenvalue() const noexcept { return offending_; }

private:
  double offending_;
};

// Malformed file or command-line input.
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qcorr
