#ifndef ELLCOB_ELLCOB_HPP
#define ELLCOB_ELLCOB_HPP

#include <ellcob/delta_eps.hpp>
#include <ellcob/genus.hpp>
#include <ellcob/hermite.hpp>
#include <ellcob/io.hpp>
#include <ellcob/matrix.hpp>
#include <ellcob/modular.hpp>
#include <ellcob/partition.hpp>
#include <ellcob/rational.hpp>
#include <ellcob/series.hpp>
#include <ellcob/string24.hpp>
#include <ellcob/twist.hpp>
#include <ellcob/weighted_poly.hpp>

#endif
