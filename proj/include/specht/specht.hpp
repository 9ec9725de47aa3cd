#pragma once

#include "specht/character_table.hpp"
#include "specht/dynkin.hpp"
#include "specht/field.hpp"
#include "specht/linalg.hpp"
#include "specht/rational.hpp"
#include "specht/root_system.hpp"
#include "specht/specht_module.hpp"
#include "specht/steinberg.hpp"
#include "specht/subsys.hpp"
#include "specht/tabloids.hpp"
#include "specht/weyl.hpp"
