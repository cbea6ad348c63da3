#pragma once

#include "polylog/errors.hpp"
#include "polylog/special/bernoulli.hpp"
#include "polylog/special/chebyshev.hpp"
#include "polylog/special/clausen.hpp"
#include "polylog/special/gamma.hpp"
#include "polylog/special/trig.hpp"
#include "polylog/special/zeta.hpp"
