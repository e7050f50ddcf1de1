/******************************************************************************
 * Copyright 2026 The glct Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * @file glct.hpp
 * @brief Umbrella header for the whole library.
 *****************************************************************************/
#pragma once

#include "glct/cache.hpp"
#include "glct/fixtures.hpp"
#include "glct/graph.hpp"
#include "glct/io.hpp"
#include "glct/linalg.hpp"
#include "glct/params.hpp"
#include "glct/signal_ops.hpp"
#include "glct/transforms.hpp"
