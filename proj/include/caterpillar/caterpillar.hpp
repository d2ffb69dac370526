#pragma once

#include "caterpillar/bijections.hpp"
#include "caterpillar/counting.hpp"
#include "caterpillar/enumeration.hpp"
#include "caterpillar/errors.hpp"
#include "caterpillar/graph_io.hpp"
#include "caterpillar/oracle.hpp"
#include "caterpillar/spine.hpp"
#include "caterpillar/tree.hpp"
#include "caterpillar/verify.hpp"
