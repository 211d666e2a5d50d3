#pragma once

#include "dfw/matrix.hpp"
#include "dfw/linalg.hpp"
#include "dfw/abelian.hpp"
#include "dfw/basis.hpp"
#include "dfw/functors.hpp"
#include "dfw/derived.hpp"
#include "dfw/theorems.hpp"
