#pragma once

#include "concat.hpp"
#include "decomposition.hpp"
#include "lcp.hpp"
#include "oracle.hpp"
#include "perm.hpp"
#include "tree_io.hpp"
