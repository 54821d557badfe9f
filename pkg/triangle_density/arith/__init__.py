from triangle_density.arith.factor import factorize, trial_factorize, divisors, euler_phi
from triangle_density.arith.sieve import PrimeTable, primes_up_to
