#pragma once

#include "dicactus/cactus.hpp"
#include "dicactus/digraph.hpp"
#include "dicactus/errors.hpp"
#include "dicactus/exact_linalg.hpp"
#include "dicactus/generators.hpp"
#include "dicactus/matrix.hpp"
#include "dicactus/oracle.hpp"
#include "dicactus/rational.hpp"
#include "dicactus/report_json.hpp"
#include "dicactus/resistance.hpp"
#include "dicactus/verify.hpp"
