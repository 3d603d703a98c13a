#pragma once

#include "gurland/enclosure.hpp"
#include "gurland/errors.hpp"
#include "gurland/expansion.hpp"
#include "gurland/mean_value.hpp"
#include "gurland/ratio.hpp"
#include "gurland/special_functions.hpp"
