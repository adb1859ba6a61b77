#pragma once

#include "ordercone/atoms.hpp"
#include "ordercone/bands.hpp"
#include "ordercone/completion.hpp"
#include "ordercone/cone.hpp"
#include "ordercone/error.hpp"
#include "ordercone/linalg.hpp"
#include "ordercone/lp.hpp"
#include "ordercone/rational.hpp"
#include "ordercone/seqspace.hpp"
#include "ordercone/subspace.hpp"
