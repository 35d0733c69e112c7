// Copyright 2026 The ctx Authors
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

#include "ctx/error.h"

namespace ctx {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput:
            return "InvalidInput";
        case ErrorKind::NonCommuting:
            return "NonCommuting";
        case ErrorKind::ClosureTooLarge:
            return "ClosureTooLarge";
        case ErrorKind::ClosureViolation:
            return "ClosureViolation";
        case ErrorKind::DegreeError:
            return "DegreeError";
        case ErrorKind::NotClosed:
            return "NotClosed";
        case ErrorKind::InconsistentStateData:
            return "InconsistentStateData";
        case ErrorKind::NotACycle:
            return "NotACycle";
        case ErrorKind::NotASymmetry:
            return "NotASymmetry";
        case ErrorKind::BudgetExceeded:
            return "BudgetExceeded";
        case ErrorKind::QTooLarge:
            return "QTooLarge";
        case ErrorKind::NoSuchN:
            return "NoSuchN";
        case ErrorKind::NotACochainSolution:
            return "NotACochainSolution";
        case ErrorKind::BackendMismatch:
            return "BackendMismatch";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {
}

void fail(ErrorKind kind, const std::string &message) {
    throw Error(kind, message);
}

}  // namespace ctx
