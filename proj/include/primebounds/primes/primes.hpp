#pragma once

#include "primebounds/primes/checkpoint.hpp"
#include "primebounds/primes/prime_source.hpp"
#include "primebounds/primes/sieve.hpp"
#include "primebounds/primes/theta.hpp"
