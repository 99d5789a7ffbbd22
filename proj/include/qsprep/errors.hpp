// Copyright 2026 The qsprep authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace qsprep {

/**
 * @brief Base class for all library errors. CLI maps these to exit code 1.
 */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input vector (or retained sparse subset) has zero norm.
struct ZeroNorm : Error {
    using Error::Error;
};

/// Input vector norm deviates beyond tolerance and normalization is off.
struct NotNormalized : Error {
    using Error::Error;
};

/// A walk that requires a full tree was given a pruned one.
struct SparseTreeUnsupported : Error {
    using Error::Error;
};

/// Split level outside [1, n].
struct SplitOutOfRange : Error {
    using Error::Error;
};

/// Paired register paths of different length.
struct LengthMismatch : Error {
    using Error::Error;
};

/// Circuit width exceeds the simulation qubit cap.
struct TooWide : Error {
    using Error::Error;
};

/// Mismatched vector/distribution dimensions.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// High-level gate encountered where only native gates are accepted.
struct UnloweredGate : Error {
    using Error::Error;
};

} // namespace qsprep
