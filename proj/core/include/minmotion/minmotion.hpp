// Copyright 2026 The minmotion Authors
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

#pragma once

#include "minmotion/curve.hpp"
#include "minmotion/error.hpp"
#include "minmotion/motion.hpp"
#include "minmotion/quat_poly.hpp"
#include "minmotion/quaternion.hpp"
#include "minmotion/rational.hpp"
#include "minmotion/real_poly.hpp"
#include "minmotion/synthesis.hpp"
