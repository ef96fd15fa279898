// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace bellspace {

/// Base class for all library errors. The CLI maps subtypes onto exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSpace : Error { using Error::Error; };
struct UnknownVariable : Error { using Error::Error; };

// An event that is not a union of atoms of the event space. Deliberately a
// distinct type: it models events that exist as subsets of the sample space
// but are outside the chosen event space.
struct EventNotMeasurable : Error { using Error::Error; };

struct ConditionOnNull : Error { using Error::Error; };
struct NotAMeasure : Error { using Error::Error; };
struct EmptyLog : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct HypothesisViolation : Error { using Error::Error; };
struct IncompleteCounterfactuals : Error { using Error::Error; };
struct InsufficientCoverage : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace bellspace
