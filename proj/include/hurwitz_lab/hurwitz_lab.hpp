#pragma once

#include "hurwitz_lab/cayley.hpp"
#include "hurwitz_lab/counter.hpp"
#include "hurwitz_lab/exact.hpp"
#include "hurwitz_lab/guards.hpp"
#include "hurwitz_lab/hurwitz.hpp"
#include "hurwitz_lab/permutation.hpp"
#include "hurwitz_lab/series.hpp"
#include "hurwitz_lab/sort_action.hpp"
#include "hurwitz_lab/walk.hpp"
#include "hurwitz_lab/weingarten.hpp"

namespace hurwitz_lab {
inline constexpr const char* kVersion = "0.1.0";
}
