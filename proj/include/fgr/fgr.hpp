#ifndef FGR_FGR_HPP_
#define FGR_FGR_HPP_

#include "fgr/abelian.hpp"
#include "fgr/basis.hpp"
#include "fgr/constructions.hpp"
#include "fgr/core_graph.hpp"
#include "fgr/covering.hpp"
#include "fgr/error.hpp"
#include "fgr/parse.hpp"
#include "fgr/permutation.hpp"
#include "fgr/pullback.hpp"
#include "fgr/random.hpp"
#include "fgr/retracts.hpp"
#include "fgr/serialize.hpp"
#include "fgr/suites.hpp"
#include "fgr/word.hpp"

#endif  // FGR_FGR_HPP_
