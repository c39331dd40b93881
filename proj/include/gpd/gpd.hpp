#pragma once

#include "gpd/action.hpp"
#include "gpd/covering.hpp"
#include "gpd/dsl.hpp"
#include "gpd/equivalence.hpp"
#include "gpd/group.hpp"
#include "gpd/group_groupoid.hpp"
#include "gpd/groupoid.hpp"
#include "gpd/report.hpp"
#include "gpd/semantics.hpp"
