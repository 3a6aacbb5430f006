#pragma once

// Convenience umbrella: pulls in the whole library.

#include "sumsetlab/codes.hpp"
#include "sumsetlab/common.hpp"
#include "sumsetlab/constructive.hpp"
#include "sumsetlab/critical.hpp"
#include "sumsetlab/element_set.hpp"
#include "sumsetlab/elliptic.hpp"
#include "sumsetlab/experiments.hpp"
#include "sumsetlab/group.hpp"
#include "sumsetlab/obstructions.hpp"
#include "sumsetlab/oracles.hpp"
#include "sumsetlab/serialize.hpp"
#include "sumsetlab/subgroup.hpp"
#include "sumsetlab/sumset.hpp"
#include "sumsetlab/verify.hpp"
