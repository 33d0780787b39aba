// Copyright 2026 The ffres Authors.
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

#include "ffres/error.hpp"

namespace ffres {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::non_prime: return "NonPrime";
    case Errc::even_characteristic: return "EvenCharacteristic";
    case Errc::too_large: return "TooLarge";
    case Errc::side_mismatch: return "SideMismatch";
    case Errc::mode_mismatch: return "ModeMismatch";
    case Errc::exact_mode_unsupported: return "ExactModeUnsupported";
    case Errc::bad_exponents: return "BadExponents";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::odd_dimension: return "OddDimension";
    case Errc::too_small_dimension: return "TooSmallDimension";
    case Errc::zero_radius: return "ZeroRadius";
    case Errc::unsupported_field: return "UnsupportedField";
    case Errc::minus_one_not_square: return "MinusOneNotSquare";
    case Errc::size_out_of_range: return "SizeOutOfRange";
    case Errc::bad_params: return "BadParams";
    case Errc::config_invalid: return "ConfigInvalid";
    case Errc::overflow: return "Overflow";
    case Errc::io: return "IoError";
    case Errc::internal: return "InternalError";
  }
  return "Unknown";
}

}  // namespace ffres
