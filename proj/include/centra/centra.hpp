#pragma once

#include "centra/bitset.hpp"
#include "centra/permutation.hpp"
#include "centra/group.hpp"
#include "centra/constructors.hpp"
#include "centra/invariants.hpp"
#include "centra/graphs.hpp"
#include "centra/analysis.hpp"
#include "centra/verify.hpp"
#include "centra/corpus_io.hpp"
#include "centra/census.hpp"
