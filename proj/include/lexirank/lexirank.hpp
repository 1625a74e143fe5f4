#pragma once

// Umbrella header: exact rationals and dyadics, the order-preserving
// medal-word encoding, the height-1 grossnumeral calculus, the truncated
// Levi-Civita field, and the expression parser that feeds them.

#include "lexirank/errors.hpp"
#include "lexirank/rational.hpp"
#include "lexirank/dyadic.hpp"
#include "lexirank/medal_word.hpp"
#include "lexirank/lexrank.hpp"
#include "lexirank/grossnum.hpp"
#include "lexirank/levicivita.hpp"
#include "lexirank/parser.hpp"
