#pragma once

#include "splicekit/brieskorn.hpp"
#include "splicekit/cover.hpp"
#include "splicekit/diagram.hpp"
#include "splicekit/errors.hpp"
#include "splicekit/exact_math.hpp"
#include "splicekit/invariants.hpp"
#include "splicekit/plumbing.hpp"
#include "splicekit/version.hpp"
