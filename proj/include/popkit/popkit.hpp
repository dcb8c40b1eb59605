#pragma once

#include <popkit/bigint.hpp>
#include <popkit/egf.hpp>
#include <popkit/enumerator.hpp>
#include <popkit/errors.hpp>
#include <popkit/matcher.hpp>
#include <popkit/notation.hpp>
#include <popkit/permutation.hpp>
#include <popkit/poset.hpp>
#include <popkit/recurrences.hpp>
#include <popkit/wilf.hpp>
