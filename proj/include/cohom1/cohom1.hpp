#pragma once

#include "cohom1/errors.hpp"
#include "cohom1/intlin.hpp"
#include "cohom1/liegroup.hpp"
#include "cohom1/diagram.hpp"
#include "cohom1/classify.hpp"
#include "cohom1/oracle/euler_recipe.hpp"
#include "cohom1/oracle/quaternion.hpp"
#include "cohom1/oracle/loop_lift.hpp"
#include "cohom1/oracle/isotropy.hpp"
#include "cohom1/symbolic.hpp"
#include "cohom1/catalog.hpp"
#include "cohom1/dsl.hpp"
#include "cohom1/record.hpp"
