#pragma once

#include "smyth/deciders.hpp"
#include "smyth/enumerate.hpp"
#include "smyth/error.hpp"
#include "smyth/frame.hpp"
#include "smyth/gallery.hpp"
#include "smyth/json_io.hpp"
#include "smyth/limits.hpp"
#include "smyth/point_set.hpp"
#include "smyth/poset.hpp"
#include "smyth/powerspace.hpp"
#include "smyth/rudin.hpp"
#include "smyth/scott.hpp"
#include "smyth/suite.hpp"
#include "smyth/symbolic.hpp"
#include "smyth/top_space.hpp"
