/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "pnet/arrows.hpp"
#include "pnet/brauer.hpp"
#include "pnet/decide.hpp"
#include "pnet/formula.hpp"
#include "pnet/rewrite.hpp"
#include "pnet/semantics.hpp"
#include "pnet/theory.hpp"
#include "pnet/translate.hpp"
