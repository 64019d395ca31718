// SPDX-License-Identifier: Apache-2.0
#pragma once

// Umbrella header: equivalent-circuit models of tunable frequency-selective
// metasurfaces plus the link-level machinery used to compare them against
// conventional reflecting-surface baselines.

#include "metasurf/config.hpp"
#include "metasurf/constants.hpp"
#include "metasurf/csv.hpp"
#include "metasurf/decibel.hpp"
#include "metasurf/errors.hpp"
#include "metasurf/layer_stack.hpp"
#include "metasurf/link.hpp"
#include "metasurf/resonator.hpp"
#include "metasurf/scenario.hpp"
#include "metasurf/surface.hpp"
#include "metasurf/tuner.hpp"
#include "metasurf/two_port.hpp"
#include "metasurf/varactor.hpp"
#include "metasurf/version.hpp"
