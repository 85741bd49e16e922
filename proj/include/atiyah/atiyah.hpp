#pragma once

#include "atiyah/character.hpp"
#include "atiyah/classifier.hpp"
#include "atiyah/expression.hpp"
#include "atiyah/format.hpp"
#include "atiyah/generator.hpp"
#include "atiyah/kring.hpp"
