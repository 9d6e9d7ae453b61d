#pragma once

#include "triet/amicability.hpp"
#include "triet/certify.hpp"
#include "triet/errors.hpp"
#include "triet/georep.hpp"
#include "triet/iet.hpp"
#include "triet/matrix.hpp"
#include "triet/morphism.hpp"
#include "triet/parse.hpp"
#include "triet/perron.hpp"
#include "triet/quadratic.hpp"
#include "triet/rational.hpp"
#include "triet/words.hpp"
