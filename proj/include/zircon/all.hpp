#pragma once

#include "zircon/coxeter.hpp"
#include "zircon/corpus.hpp"
#include "zircon/fixed_points.hpp"
#include "zircon/io.hpp"
#include "zircon/matching.hpp"
#include "zircon/mobius.hpp"
#include "zircon/poset.hpp"
#include "zircon/poset_map.hpp"
#include "zircon/sweep.hpp"
#include "zircon/zircon_property.hpp"
