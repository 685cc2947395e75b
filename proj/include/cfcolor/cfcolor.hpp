#pragma once

#include "cfcolor/circle_cf.hpp"
#include "cfcolor/errors.hpp"
#include "cfcolor/framework.hpp"
#include "cfcolor/geometry.hpp"
#include "cfcolor/grounded_cf.hpp"
#include "cfcolor/hypergraph.hpp"
#include "cfcolor/instances.hpp"
#include "cfcolor/io.hpp"
#include "cfcolor/oracle.hpp"
#include "cfcolor/pattern_cf.hpp"
#include "cfcolor/weak_lll.hpp"
