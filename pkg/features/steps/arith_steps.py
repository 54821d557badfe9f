import math
from types import SimpleNamespace

from behave import *

from triangle_density.arith import PrimeTable, divisors, euler_phi, factorize, primes_up_to, trial_factorize
from triangle_density.errors import InvalidArgumentException

use_step_matcher("re")


def is_prime_by_trial(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@given("a prime table up to (?P<limit>\\d+)")
def step_impl(context, limit):
    """
    Parameters
    ----------
    context : behave.runner.Context
    limit : str
    """
    context.args = SimpleNamespace()
    context.args.table = primes_up_to(int(limit))


@then("the primes are (?P<primes>[\\d,]+)")
def step_impl(context, primes):
    """
    Parameters
    ----------
    context : behave.runner.Context
    primes : str
    """
    assert context.args.table.primes.tolist() == [int(p) for p in primes.split(",")]


@then("the shared table counts (?P<count>\\d+) primes up to (?P<x>\\d+)")
def step_impl(context, count, x):
    """
    Parameters
    ----------
    context : behave.runner.Context
    count : str
    x : str
    """
    assert context.primes.count(int(x)) == int(count)


@given("a prime table up to (?P<limit>\\d+) sieved in segments of (?P<segment>\\d+)")
def step_impl(context, limit, segment):
    """
    Parameters
    ----------
    context : behave.runner.Context
    limit : str
    segment : str
    """
    context.args = SimpleNamespace()
    context.args.limit = int(limit)
    context.args.table = primes_up_to(int(limit), segment_size=int(segment))


@then("it equals the table sieved in one segment")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    table: PrimeTable = context.args.table
    assert table == primes_up_to(context.args.limit, segment_size=1 << 20)


@then("it agrees with trial division up to (?P<x>\\d+)")
def step_impl(context, x):
    """
    Parameters
    ----------
    context : behave.runner.Context
    x : str
    """
    table: PrimeTable = context.args.table
    expected = [n for n in range(int(x) + 1) if is_prime_by_trial(n)]
    assert table.primes_up_to(int(x)).tolist() == expected
    assert table.mask(int(x)).nonzero()[0].tolist() == expected


@then("(?P<n>\\d+) is prime in the shared table")
def step_impl(context, n):
    assert context.primes.is_prime(int(n))


@then("(?P<n>\\d+) is not prime in the shared table")
def step_impl(context, n):
    assert not context.primes.is_prime(int(n))


@when("(?P<n>\\d+) is factored with the shared table")
def step_impl(context, n):
    """
    Parameters
    ----------
    context : behave.runner.Context
    n : str
    """
    context.args = SimpleNamespace()
    context.args.factorization = factorize(int(n), context.primes)


@then("the factorization is ?(?P<factors>.*)")
def step_impl(context, factors):
    """
    Parameters
    ----------
    context : behave.runner.Context
    factors : str
        Space separated p^nu terms, empty for 1
    """
    expected = [tuple(int(part) for part in term.split("^")) for term in factors.split()]
    factorization = context.args.factorization
    assert list(factorization) == expected
    assert factorization == trial_factorize(factorization.n)


@then("factoring (?P<n>\\d+) is an invalid argument")
def step_impl(context, n):
    """
    Parameters
    ----------
    context : behave.runner.Context
    n : str
    """
    try:
        factorize(int(n), context.args.table)
    except InvalidArgumentException:
        return
    assert False, "factorize(%s) should have been refused" % n


@then("the divisors of (?P<n>\\d+) are (?P<expected>[\\d,]+)")
def step_impl(context, n, expected):
    """
    Parameters
    ----------
    context : behave.runner.Context
    n : str
    expected : str
    """
    assert divisors(factorize(int(n), context.primes)) == [int(d) for d in expected.split(",")]


@then("phi of (?P<n>\\d+) is (?P<phi>\\d+)")
def step_impl(context, n, phi):
    assert euler_phi(trial_factorize(int(n))) == int(phi)


@then("for every n up to (?P<x>\\d+) the table factorization equals trial division "
      "and has prod\\(nu\\+1\\) divisors")
def step_impl(context, x):
    for n in range(1, int(x) + 1):
        factorization = factorize(n, context.primes)
        assert factorization == trial_factorize(n), n
        assert math.prod(p ** nu for p, nu in factorization) == n
        assert len(divisors(factorization)) == math.prod(nu + 1 for _, nu in factorization), n


@then("phi\\(ab\\) = phi\\(a\\) phi\\(b\\) for every coprime pair a < b up to (?P<limit>\\d+)")
def step_impl(context, limit):
    """
    Parameters
    ----------
    context : behave.runner.Context
    limit : str
    """
    limit = int(limit)
    phi = [0] + [euler_phi(factorize(n, context.primes)) for n in range(1, limit + 1)]
    for a in range(1, limit + 1):
        for b in range(a + 1, limit + 1):
            if math.gcd(a, b) == 1:
                assert euler_phi(factorize(a * b, context.primes)) == phi[a] * phi[b], (a, b)
