#pragma once

#include "ladfn/arith_function.hpp"
#include "ladfn/derivative.hpp"
#include "ladfn/dirichlet.hpp"
#include "ladfn/errors.hpp"
#include "ladfn/fnspec.hpp"
#include "ladfn/primes.hpp"
#include "ladfn/prime_assignment.hpp"
#include "ladfn/rational.hpp"
#include "ladfn/table_io.hpp"
#include "ladfn/verify.hpp"
