/*
   Copyright 2026 The apnforge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Umbrella header for the library modules (the CLI lives in cli.hpp).

#ifndef APNFORGE_APNFORGE_HPP
#define APNFORGE_APNFORGE_HPP

#include "apnforge/error.hpp"
#include "apnforge/gf2m.hpp"
#include "apnforge/polyalg.hpp"
#include "apnforge/embed.hpp"
#include "apnforge/bipoly.hpp"
#include "apnforge/apncore.hpp"
#include "apnforge/verify.hpp"

#endif  // APNFORGE_APNFORGE_HPP
