#pragma once

#include "arch.hpp"
#include "bigint.hpp"
#include "level_ancestor.hpp"
#include "mas.hpp"
#include "oracle.hpp"
#include "rmq.hpp"
#include "sas.hpp"
#include "word.hpp"
