#pragma once
// Umbrella header.

#include "pstamp/base.hpp"
#include "pstamp/bounds.hpp"
#include "pstamp/common.hpp"
#include "pstamp/construct.hpp"
#include "pstamp/rational.hpp"
#include "pstamp/reach.hpp"
#include "pstamp/representation.hpp"
#include "pstamp/search.hpp"
#include "pstamp/text.hpp"
