#pragma once

#include "percurve/diagonal.hpp"
#include "percurve/dynamics.hpp"
#include "percurve/engine.hpp"
#include "percurve/newton.hpp"
#include "percurve/perd4.hpp"
#include "percurve/report.hpp"
#include "percurve/rho.hpp"
#include "percurve/sampler.hpp"
