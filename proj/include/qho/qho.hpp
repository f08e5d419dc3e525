#pragma once

#include "qho/errors.hpp"
#include "qho/gram.hpp"
#include "qho/hermite_expansion.hpp"
#include "qho/multidim.hpp"
#include "qho/operator.hpp"
#include "qho/oscillator1d.hpp"
#include "qho/params.hpp"
#include "qho/quadrature.hpp"
#include "qho/quaternion.hpp"
#include "qho/spherical.hpp"
#include "qho/specfun.hpp"
#include "qho/wavestate.hpp"
