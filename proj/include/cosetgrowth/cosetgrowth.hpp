#pragma once

#include "cosetgrowth/ball.hpp"
#include "cosetgrowth/error.hpp"
#include "cosetgrowth/experiments.hpp"
#include "cosetgrowth/geometry.hpp"
#include "cosetgrowth/growth.hpp"
#include "cosetgrowth/oracle.hpp"
#include "cosetgrowth/presentation.hpp"
#include "cosetgrowth/rational.hpp"
#include "cosetgrowth/rips.hpp"
#include "cosetgrowth/small_cancellation.hpp"
#include "cosetgrowth/stallings.hpp"
#include "cosetgrowth/deadline.hpp"
#include "cosetgrowth/version.hpp"
#include "cosetgrowth/word.hpp"
