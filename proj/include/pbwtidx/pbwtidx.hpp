#pragma once

#include "pbwtidx/alphabet.hpp"
#include "pbwtidx/collection.hpp"
#include "pbwtidx/error.hpp"
#include "pbwtidx/fm.hpp"
#include "pbwtidx/kernels.hpp"
#include "pbwtidx/oracle.hpp"
#include "pbwtidx/pbwt.hpp"
#include "pbwtidx/permutations.hpp"
#include "pbwtidx/positional.hpp"
#include "pbwtidx/rank.hpp"
#include "pbwtidx/serialize.hpp"
