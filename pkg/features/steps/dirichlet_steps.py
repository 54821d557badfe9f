import math
from types import SimpleNamespace

import numpy as np
from behave import *

from triangle_density.dirichlet import admissible_primes, infntsize_primes, logsize_vs_asymptote, primes_in_class, \
    threshold_of, truncated_class, truncated_logsize
from triangle_density.errors import InvalidArgumentException
from triangle_density.models import ProgressionClass

use_step_matcher("re")


@then("the threshold at (?P<x>\\d+) with delta 0.1 is about (?P<value>[\\d.]+)")
def step_impl(context, x, value):
    assert abs(threshold_of(int(x), 0.1) - float(value)) < 0.01


@when("the logarithmic size of the class (?P<a>\\d+) mod (?P<b>\\d+) is taken at (?P<x>\\d+)")
def step_impl(context, a, b, x):
    """
    Parameters
    ----------
    context : behave.runner.Context
    a : str
    b : str
    x : str
    """
    context.args = SimpleNamespace()
    context.args.a, context.args.b, context.args.x = int(a), int(b), int(x)
    context.args.report = logsize_vs_asymptote(ProgressionClass(int(a), int(b)), int(x), context.primes)


@then("it matches the trial-division sum to 1e-12")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    args = context.args
    oracle = 0.0
    for p in range(2, args.x + 1):
        if p % args.b == args.a and all(p % d for d in range(2, math.isqrt(p) + 1)):
            oracle += 1.0 / p
    assert abs(args.report.ell - oracle) < 1e-12


@then("it is about (?P<value>[\\d.]+) within (?P<tolerance>[\\d.]+)")
def step_impl(context, value, tolerance):
    assert abs(context.args.report.ell - float(value)) < float(tolerance)


@then("the predicted value is log log 100 over 2")
def step_impl(context):
    assert abs(context.args.report.predicted - math.log(math.log(100)) / 2) < 1e-12
    assert abs(context.args.report.ratio - context.args.report.ell / context.args.report.predicted) < 1e-12


@then("the logarithmic size of the class (?P<a>\\d+) mod (?P<b>\\d+) increases over (?P<xs>[\\d,]+)")
def step_impl(context, a, b, xs):
    cls = ProgressionClass(int(a), int(b))
    sizes = [logsize_vs_asymptote(cls, int(x), context.primes).ell for x in xs.split(",")]
    assert all(u < v for u, v in zip(sizes, sizes[1:]))


@then("the truncated size of the class (?P<a>\\d+) mod (?P<b>\\d+) at (?P<x>\\d+) is below the full size")
def step_impl(context, a, b, x):
    cls = ProgressionClass(int(a), int(b))
    full = logsize_vs_asymptote(cls, int(x), context.primes)
    truncated = truncated_logsize(cls, int(x), 0.1, context.primes)
    assert 0 < truncated.ell < full.ell
    assert truncated.predicted < full.predicted


@then("the truncated class (?P<a>\\d+) mod (?P<b>\\d+) at (?P<x>\\d+) with delta 0.1 is (?P<primes>[\\d,]+)")
def step_impl(context, a, b, x, primes):
    context.args = SimpleNamespace()
    context.args.cls = ProgressionClass(int(a), int(b))
    context.args.x = int(x)
    context.args.truncated = truncated_class(context.args.cls, int(x), 0.1, context.primes)
    assert context.args.truncated.tolist() == [int(p) for p in primes.split(",")]


@then("it is contained in the full class")
def step_impl(context):
    full = set(primes_in_class(context.args.cls, context.args.x, context.primes).tolist())
    assert set(context.args.truncated.tolist()) < full


@then("the class (?P<a>\\d+) mod (?P<b>\\d+) is an invalid argument")
def step_impl(context, a, b):
    try:
        ProgressionClass(int(a), int(b))
    except InvalidArgumentException:
        return
    assert False, "%s mod %s was accepted" % (a, b)


@when("the infinite-size primes for m = (?P<m>\\d+) are taken up to (?P<x>\\d+)")
def step_impl(context, m, x):
    """
    Parameters
    ----------
    context : behave.runner.Context
    m : str
    x : str
    """
    context.args = SimpleNamespace()
    context.args.result = infntsize_primes(int(m), int(x), context.primes)


@then("they are (?P<primes>[\\d,]+)")
def step_impl(context, primes):
    assert context.args.result.primes.tolist() == [int(p) for p in primes.split(",")]


@then("the progression primes start at (?P<first>\\d+) and the statement indexing starts at (?P<statement>\\d+)")
def step_impl(context, first, statement):
    result = context.args.result
    assert result.progression_primes.tolist()[0] == int(first)
    assert result.statement_progression_primes.tolist()[0] == int(statement)


@then("every progression prime is one of them")
def step_impl(context):
    result = context.args.result
    assert len(result.statement_progression_primes) > 0
    assert np.isin(result.statement_progression_primes, result.primes).all()
    assert all(math.gcd((p - 1) // 2, result.m) == 1 for p in result.primes.tolist())


@then("P_x for m = (?P<m>\\d+) at (?P<x>\\d+) with delta 0.1 has (?P<size>\\d+) primes starting at (?P<first>\\d+)")
def step_impl(context, m, x, size, first):
    px = admissible_primes(int(m), int(x), threshold_of(int(x), 0.1), context.primes)
    assert len(px) == int(size)
    assert int(px[0]) == int(first)


@then("for every m from (?P<low>\\d+) to (?P<high>\\d+) the progression primes up to (?P<x>\\d+) are "
      "infinite-size primes")
def step_impl(context, low, high, x):
    for m in range(int(low), int(high) + 1):
        result = infntsize_primes(m, int(x), context.primes)
        for progression in (result.progression_primes, result.statement_progression_primes):
            assert len(progression) > 0, m
            assert np.isin(progression, result.primes).all(), m
            assert all(math.gcd((p - 1) // 2, m) == 1 for p in progression.tolist()), m


@then("in that table the logarithmic size of the class (?P<a>\\d+) mod (?P<b>\\d+) increases over (?P<xs>[\\d,]+)")
def step_impl(context, a, b, xs):
    """
    Parameters
    ----------
    context : behave.runner.Context
    a : str
    b : str
    xs : str
    """
    cls = ProgressionClass(int(a), int(b))
    context.args.reports = [logsize_vs_asymptote(cls, int(x), context.args.table) for x in xs.split(",")]
    sizes = [report.ell for report in context.args.reports]
    assert all(u < v for u, v in zip(sizes, sizes[1:]))


@then("the ratio at (?P<x>\\d+) lies between (?P<low>[\\d.]+) and (?P<high>[\\d.]+)")
def step_impl(context, x, low, high):
    report = next(report for report in context.args.reports if report.x == int(x))
    assert float(low) <= report.ratio <= float(high)
