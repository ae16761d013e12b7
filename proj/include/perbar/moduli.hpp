#pragma once

#include "moduli/cross_ratio.hpp"
#include "moduli/hpoint.hpp"
#include "moduli/plumbing.hpp"
