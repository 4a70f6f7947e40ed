// SPDX-FileCopyrightText: Copyright (c) 2026 The chiral-spectra Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "chiral_spectra/error.hpp"
#include "chiral_spectra/linalg.hpp"
#include "chiral_spectra/graph.hpp"
#include "chiral_spectra/chiral.hpp"
#include "chiral_spectra/spectral.hpp"
#include "chiral_spectra/walks.hpp"
#include "chiral_spectra/mko.hpp"
#include "chiral_spectra/zeta.hpp"
#include "chiral_spectra/random_pairs.hpp"
#include "chiral_spectra/report.hpp"
#include "chiral_spectra/verify_suite.hpp"
