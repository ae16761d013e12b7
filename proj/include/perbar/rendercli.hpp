#pragma once

#include "rendercli/overlays.hpp"
#include "rendercli/param.hpp"
#include "rendercli/render.hpp"
#include "rendercli/wp.hpp"
