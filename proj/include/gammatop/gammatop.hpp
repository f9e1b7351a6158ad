#pragma once

#include "gammatop/audit.hpp"
#include "gammatop/context.hpp"
#include "gammatop/enumerate.hpp"
#include "gammatop/error.hpp"
#include "gammatop/json_io.hpp"
#include "gammatop/morphisms.hpp"
#include "gammatop/operation.hpp"
#include "gammatop/point_set.hpp"
#include "gammatop/pool.hpp"
#include "gammatop/properties.hpp"
#include "gammatop/report.hpp"
#include "gammatop/search.hpp"
#include "gammatop/set_cover.hpp"
#include "gammatop/space.hpp"
#include "gammatop/worked_examples.hpp"
