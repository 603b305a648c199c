// Copyright 2026 The majcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "majcodes/error.h"

namespace majcodes {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::kDimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::kParse:
            return "ParseError";
        case ErrorCode::kIllegalCharacter:
            return "IllegalCharacter";
        case ErrorCode::kLengthMismatch:
            return "LengthMismatch";
        case ErrorCode::kNonCommutingGenerators:
            return "NonCommutingGenerators";
        case ErrorCode::kEmptyInput:
            return "EmptyInput";
        case ErrorCode::kNoLogicalQubits:
            return "NoLogicalQubits";
        case ErrorCode::kNoLogicals:
            return "NoLogicals";
        case ErrorCode::kNoLayout:
            return "NoLayout";
        case ErrorCode::kOddModeCount:
            return "OddModeCount";
        case ErrorCode::kOddTotalModes:
            return "OddTotalModes";
        case ErrorCode::kOddLogicalModeCount:
            return "OddLogicalModeCount";
        case ErrorCode::kInvalidInputCode:
            return "InvalidInputCode";
        case ErrorCode::kUnknownName:
            return "UnknownName";
        case ErrorCode::kBadParams:
            return "BadParams";
        case ErrorCode::kInvalidRegion:
            return "InvalidRegion";
        case ErrorCode::kWidthExceedsLattice:
            return "WidthExceedsLattice";
        case ErrorCode::kPeriodicAxis:
            return "PeriodicAxis";
        case ErrorCode::kStripsTooNarrow:
            return "StripsTooNarrow";
        case ErrorCode::kInconsistencyDetected:
            return "InconsistencyDetected";
        case ErrorCode::kEvenR:
            return "EvenR";
        case ErrorCode::kRTooSmall:
            return "RTooSmall";
        case ErrorCode::kInvalidSurface:
            return "InvalidSurface";
        case ErrorCode::kNotAPath:
            return "NotAPath";
        case ErrorCode::kPathDoesNotConnectExternalFaces:
            return "PathDoesNotConnectExternalFaces";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace majcodes
