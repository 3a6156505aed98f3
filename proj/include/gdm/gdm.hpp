// Copyright 2026 The GDM Authors
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

#include "gdm/error.hpp"
#include "gdm/prime_field.hpp"
#include "gdm/ext_field.hpp"
#include "gdm/galois_int.hpp"
#include "gdm/roots.hpp"
#include "gdm/trig.hpp"
#include "gdm/transforms.hpp"
#include "gdm/cyclotomic.hpp"
#include "gdm/pipeline.hpp"
#include "gdm/wire.hpp"
