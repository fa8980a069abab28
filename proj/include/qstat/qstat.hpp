// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "qstat/beamsplitter.hpp"
#include "qstat/errors.hpp"
#include "qstat/first_quantization.hpp"
#include "qstat/fock.hpp"
#include "qstat/io.hpp"
#include "qstat/permanent.hpp"
#include "qstat/permutations.hpp"
#include "qstat/statistics_kind.hpp"
#include "qstat/thermal.hpp"
