#pragma once

#include "snakes/error.hpp"
#include "snakes/expansion.hpp"
#include "snakes/int_matrix.hpp"
#include "snakes/io.hpp"
#include "snakes/matching.hpp"
#include "snakes/oracle.hpp"
#include "snakes/poly.hpp"
#include "snakes/snake.hpp"
#include "snakes/surface.hpp"
