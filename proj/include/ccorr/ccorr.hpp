// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ccorr/errors.hpp"
#include "ccorr/types.hpp"
#include "ccorr/kernel.hpp"
#include "ccorr/correntropy.hpp"
#include "ccorr/quadrature.hpp"
#include "ccorr/mccc.hpp"
#include "ccorr/rls.hpp"
#include "ccorr/random.hpp"
#include "ccorr/sim.hpp"
