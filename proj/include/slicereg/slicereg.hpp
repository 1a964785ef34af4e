#pragma once

#include "slicereg/quaternion.hpp"
#include "slicereg/summation.hpp"
#include "slicereg/series.hpp"
#include "slicereg/random.hpp"
#include "slicereg/quadrature.hpp"
#include "slicereg/parallel.hpp"
#include "slicereg/spaces.hpp"
#include "slicereg/measures.hpp"
#include "slicereg/carleson.hpp"
#include "slicereg/generators.hpp"
#include "slicereg/embedding.hpp"
#include "slicereg/json_io.hpp"
#include "slicereg/commands.hpp"
