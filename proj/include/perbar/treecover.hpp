#pragma once

#include "treecover/marked_tree.hpp"
#include "treecover/cover_type.hpp"
#include "treecover/catalog.hpp"
