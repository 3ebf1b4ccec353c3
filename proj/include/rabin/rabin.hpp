#pragma once

#include <rabin/bench.hpp>
#include <rabin/bit_label.hpp>
#include <rabin/colour.hpp>
#include <rabin/explicit_tree.hpp>
#include <rabin/game.hpp>
#include <rabin/io.hpp>
#include <rabin/measure.hpp>
#include <rabin/oracle.hpp>
#include <rabin/solver.hpp>
#include <rabin/succinct_tree.hpp>
#include <rabin/tree.hpp>
