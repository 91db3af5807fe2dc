#pragma once

#include "aseries/real.hpp"
#include "aseries/exactnum.hpp"
#include "aseries/polyops.hpp"
#include "aseries/closedform.hpp"
#include "aseries/quadrature.hpp"
#include "aseries/series.hpp"
