// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Umbrella header.

#pragma once

#include "irsop/baselines.hpp"
#include "irsop/fading.hpp"
#include "irsop/geometry.hpp"
#include "irsop/moments.hpp"
#include "irsop/montecarlo.hpp"
#include "irsop/outage.hpp"
#include "irsop/quadrature.hpp"
#include "irsop/rng.hpp"
#include "irsop/runspec.hpp"
#include "irsop/specfun.hpp"
