/* Copyright 2026 The ccdefun Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef CCDEFUN_CCDEFUN_HPP
#define CCDEFUN_CCDEFUN_HPP

#include "ccdefun/cc_check.hpp"
#include "ccdefun/cc_reduce.hpp"
#include "ccdefun/ccs_reduce.hpp"
#include "ccdefun/context.hpp"
#include "ccdefun/dcc.hpp"
#include "ccdefun/defun.hpp"
#include "ccdefun/diagram.hpp"
#include "ccdefun/emit.hpp"
#include "ccdefun/error.hpp"
#include "ccdefun/harness.hpp"
#include "ccdefun/parse.hpp"
#include "ccdefun/print.hpp"
#include "ccdefun/program.hpp"
#include "ccdefun/refun.hpp"
#include "ccdefun/term.hpp"

#endif  // CCDEFUN_CCDEFUN_HPP
