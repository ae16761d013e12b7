#pragma once

#include "perbar/elliptic.hpp"
#include "perbar/exactnum.hpp"
#include "perbar/moduli.hpp"
#include "perbar/percurve.hpp"
#include "perbar/rendercli.hpp"
#include "perbar/treecover.hpp"
