#pragma once

#include "budget.hpp"
#include "channel.hpp"
#include "common.hpp"
#include "config.hpp"
#include "harness.hpp"
#include "optimizer.hpp"
#include "qcqp.hpp"
#include "results.hpp"
#include "rng.hpp"
#include "sensing.hpp"
#include "types.hpp"
