#ifndef GRAPHCAT_GRAPHCAT_HPP
#define GRAPHCAT_GRAPHCAT_HPP

#include "graphcat/canonical.hpp"
#include "graphcat/coset_enumeration.hpp"
#include "graphcat/diagram.hpp"
#include "graphcat/error.hpp"
#include "graphcat/exact_rank.hpp"
#include "graphcat/fibration.hpp"
#include "graphcat/graph.hpp"
#include "graphcat/homomorphism.hpp"
#include "graphcat/limits.hpp"
#include "graphcat/normal_closure.hpp"
#include "graphcat/partition.hpp"
#include "graphcat/perm_group.hpp"
#include "graphcat/rep_spaces.hpp"
#include "graphcat/tensor.hpp"
#include "graphcat/tensor_build.hpp"
#include "graphcat/word.hpp"

#endif
