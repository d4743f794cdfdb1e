// Copyright 2026 The Authors.
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

#include "locrep/bounds.hpp"
#include "locrep/coord_set.hpp"
#include "locrep/error.hpp"
#include "locrep/gf2m.hpp"
#include "locrep/io.hpp"
#include "locrep/linear_code.hpp"
#include "locrep/regset.hpp"
#include "locrep/repair.hpp"
#include "locrep/square.hpp"
