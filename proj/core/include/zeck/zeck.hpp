#pragma once

#include "zeck/adder.hpp"
#include "zeck/arith.hpp"
#include "zeck/automaton.hpp"
#include "zeck/convert.hpp"
#include "zeck/digits.hpp"
#include "zeck/errors.hpp"
#include "zeck/fib.hpp"
#include "zeck/fibcodec.hpp"
#include "zeck/random.hpp"
#include "zeck/signed.hpp"
#include "zeck/trace.hpp"
