#pragma once

#include "tori/arith.hpp"
#include "tori/bruteforce.hpp"
#include "tori/classify.hpp"
#include "tori/error.hpp"
#include "tori/exceptional.hpp"
#include "tori/field.hpp"
#include "tori/group.hpp"
#include "tori/matrix.hpp"
#include "tori/rational.hpp"
#include "tori/rootsys.hpp"
#include "tori/serialize.hpp"
#include "tori/torus.hpp"
#include "tori/verify.hpp"
#include "tori/weylclass.hpp"
