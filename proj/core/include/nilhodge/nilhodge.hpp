#pragma once

#include "nilhodge/bigrading.hpp"
#include "nilhodge/catalog.hpp"
#include "nilhodge/cohomology.hpp"
#include "nilhodge/embedding.hpp"
#include "nilhodge/errors.hpp"
#include "nilhodge/format.hpp"
#include "nilhodge/lie_algebra.hpp"
#include "nilhodge/matrix.hpp"
#include "nilhodge/scalar.hpp"
#include "nilhodge/search.hpp"
#include "nilhodge/survey.hpp"
