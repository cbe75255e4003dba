// SPDX-License-Identifier: Apache-2.0
//
// rispolsk: link-level simulation of RIS-encoded polarization shift keying
// Copyright (C) 2026 The rispolsk authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <rispolsk/error.hpp>
#include <rispolsk/geometry.hpp>
#include <rispolsk/polarization.hpp>
#include <rispolsk/modem.hpp>
#include <rispolsk/channel.hpp>
#include <rispolsk/quadrature.hpp>
#include <rispolsk/theory.hpp>
#include <rispolsk/random.hpp>
#include <rispolsk/simulation.hpp>
#include <rispolsk/config.hpp>
