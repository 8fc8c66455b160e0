#pragma once

#include "arith.hpp"
#include "bijections.hpp"
#include "catalog.hpp"
#include "enumerate.hpp"
#include "equiv.hpp"
#include "expr.hpp"
#include "series.hpp"
#include "word.hpp"
