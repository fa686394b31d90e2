#pragma once

#include "seaweed/integer.hpp"
#include "seaweed/partitions.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/render.hpp"
#include "seaweed/series.hpp"
#include "seaweed/product.hpp"
#include "seaweed/bivariate.hpp"
#include "seaweed/stats.hpp"
#include "seaweed/checks.hpp"
#include "seaweed/serialize.hpp"
