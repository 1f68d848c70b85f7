/*
   Copyright 2026 The rookoid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ROOKOID_ERRORS_HPP
#define ROOKOID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rookoid {

  //! Bad argument: out-of-range index, size or colour mismatch, unknown
  //! object.
  class DomainError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  //! A support that is not the graph of a partial injection.
  class InjectivityError : public DomainError {
   public:
    using DomainError::DomainError;
  };

  //! A computation that would exceed a configured size cap.
  class ResourceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Floating-point splitting or verification could not reach the requested
  //! tolerance. Carries the best residual observed.
  class NumericDegeneracyError : public std::runtime_error {
   public:
    NumericDegeneracyError(std::string const& what,
                           double      residual,
                           double      suggested_tolerance)
        : std::runtime_error(what),
          residual_(residual),
          suggested_tolerance_(suggested_tolerance) {}

    double residual() const noexcept {
      return residual_;
    }
    double suggested_tolerance() const noexcept {
      return suggested_tolerance_;
    }

   private:
    double residual_;
    double suggested_tolerance_;
  };

  //! Malformed or wrong-schema JSON input.
  class SchemaError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

}  // namespace rookoid

#endif  // ROOKOID_ERRORS_HPP
