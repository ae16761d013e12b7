#pragma once

#include "elliptic/group.hpp"
#include "elliptic/periods.hpp"
#include "elliptic/plane_curve.hpp"
#include "elliptic/punctures.hpp"
#include "elliptic/weierstrass.hpp"
