#pragma once

#include "charsum/gf2poly.hpp"
#include "charsum/field.hpp"
#include "charsum/tower.hpp"
#include "charsum/io.hpp"
#include "charsum/decompose.hpp"
#include "charsum/kloosterman.hpp"
#include "charsum/linsolve.hpp"
#include "charsum/weil.hpp"
#include "charsum/sums.hpp"
#include "charsum/parallel.hpp"
