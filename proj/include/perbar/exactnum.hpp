#pragma once

#include "exactnum/elimination.hpp"
#include "exactnum/factor.hpp"
#include "exactnum/json_io.hpp"
#include "exactnum/mpoly.hpp"
#include "exactnum/number_field.hpp"
#include "exactnum/rational.hpp"
#include "exactnum/rfunc.hpp"
#include "exactnum/roots.hpp"
#include "exactnum/series.hpp"
#include "exactnum/upoly.hpp"
