// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POSITROID_ERROR_HPP
#define POSITROID_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace positroid {

enum class errc {
  out_of_range,
  degenerate_pair,
  overlap,
  not_a_component,
  size_limit,
  empty_bases,
  box_outside_shape,
  not_le,
  not_a_matroid,
  not_nice,
  rank_deficient,
  dimension_mismatch,
  invalid_argument,
  parse_error,
};

constexpr std::string_view errc_name(errc code) {
  switch (code) {
    case errc::out_of_range: return "OutOfRange";
    case errc::degenerate_pair: return "DegeneratePair";
    case errc::overlap: return "OverlapError";
    case errc::not_a_component: return "NotAComponent";
    case errc::size_limit: return "SizeLimit";
    case errc::empty_bases: return "EmptyBases";
    case errc::box_outside_shape: return "BoxOutsideShape";
    case errc::not_le: return "NotLe";
    case errc::not_a_matroid: return "NotAMatroid";
    case errc::not_nice: return "NotNice";
    case errc::rank_deficient: return "RankDeficient";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every precondition failure in the library is reported as this type; the
/// code identifies which contract was violated.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Internal consistency checks that must hold for every valid input. These
/// stay active in release builds.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define POSITROID_CHECK(cond, msg)                                        \
  do {                                                                    \
    if (!(cond)) throw ::positroid::invariant_violation(                  \
        std::string(__FILE__) + ":" + std::to_string(__LINE__) + ": " + (msg)); \
  } while (false)

}  // namespace positroid

#endif  // POSITROID_ERROR_HPP
