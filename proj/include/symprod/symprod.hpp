#pragma once

#include "symprod/arith.hpp"
#include "symprod/charclass.hpp"
#include "symprod/classifier.hpp"
#include "symprod/exterior.hpp"
#include "symprod/linalg.hpp"
#include "symprod/macdonald.hpp"
#include "symprod/render.hpp"
#include "symprod/skeleton.hpp"
#include "symprod/surface.hpp"
#include "symprod/tensor.hpp"
