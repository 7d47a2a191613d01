#pragma once

#include "mbf/boolcube.hpp"
#include "mbf/generator.hpp"
#include "mbf/identify.hpp"
#include "mbf/knowledge.hpp"
#include "mbf/oracle.hpp"
#include "mbf/search.hpp"
