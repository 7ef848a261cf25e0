// Copyright 2026 The agectl Authors
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

#pragma once

namespace agectl {

// Principal branch W0 of the Lambert function: the w >= -1 with w e^w = x.
// Throws std::domain_error for x < -1/e or NaN.
double LambertW0(double x);

// W0(exp(log_x)) without forming exp(log_x); usable when x overflows.
double LambertW0FromLog(double log_x);

}  // namespace agectl
