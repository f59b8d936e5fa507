/*
 * Copyright 2026 The ACES C++ Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ACES_STATUS_MACROS_H_
#define ACES_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define ACES_STATUS_CONCAT_INNER_(x, y) x##y
#define ACES_STATUS_CONCAT_(x, y) ACES_STATUS_CONCAT_INNER_(x, y)

#define ACES_RETURN_IF_ERROR(expr)           \
  do {                                       \
    ::absl::Status _aces_status = (expr);    \
    if (!_aces_status.ok()) return _aces_status; \
  } while (0)

#define ACES_ASSIGN_OR_RETURN_IMPL_(tmp, lhs, rexpr) \
  auto tmp = (rexpr);                                \
  if (!tmp.ok()) return std::move(tmp).status();     \
  lhs = std::move(tmp).value()

// Evaluates an absl::StatusOr<T> expression and either assigns the value to
// `lhs` or returns the error from the enclosing function.
#define ACES_ASSIGN_OR_RETURN(lhs, rexpr) \
  ACES_ASSIGN_OR_RETURN_IMPL_(            \
      ACES_STATUS_CONCAT_(_aces_statusor_, __LINE__), lhs, rexpr)

#endif  // ACES_STATUS_MACROS_H_
