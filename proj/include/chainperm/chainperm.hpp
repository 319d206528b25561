#pragma once

// Umbrella header.

#include "chainperm/bigint.hpp"
#include "chainperm/chain.hpp"
#include "chainperm/closed_forms.hpp"
#include "chainperm/enumerate.hpp"
#include "chainperm/errors.hpp"
#include "chainperm/pattern.hpp"
#include "chainperm/permutation.hpp"
#include "chainperm/structural.hpp"
