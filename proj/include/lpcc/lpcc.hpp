// Copyright 2026 The lpcc authors.
// Use of this source code is governed by the Apache-2.0 license that can be
// found in the LICENSE file.
//
// Umbrella header pulling in the whole toolkit.

#pragma once

#include "lpcc/bicriteria.hpp"
#include "lpcc/common.hpp"
#include "lpcc/corpus.hpp"
#include "lpcc/exact.hpp"
#include "lpcc/io.hpp"
#include "lpcc/model.hpp"
#include "lpcc/oracle.hpp"
#include "lpcc/random.hpp"
#include "lpcc/reformulation.hpp"
#include "lpcc/simplex.hpp"
