import math
from types import SimpleNamespace

import numpy as np
from behave import *

from triangle_density.arith import trial_factorize
from triangle_density.bertram import prime_factor_mask
from triangle_density.dirichlet import admissible_primes
from triangle_density.errors import InvalidArgumentException
from triangle_density.models import SieveParams
from triangle_density.turan_kubilius import f_omega, omega_counts, sx_series, tk_inequality_check, tk_statistics

use_step_matcher("re")


def direct_sums(px, x):
    b2 = g = a = 0.0
    for p in px:
        power = p
        while power <= x:
            b2 += 1.0 / power
            g += 1.0 / (power * p)
            a += (1.0 / power) * (1.0 - 1.0 / p)
            power *= p
    return b2, g, a


@when("the statistics are taken at (?P<x>\\d+) for m = (?P<m>\\d+)")
def step_impl(context, x, m):
    """
    Parameters
    ----------
    context : behave.runner.Context
    x : str
    m : str
    """
    context.args = SimpleNamespace()
    context.args.params = SieveParams(int(x), 0.1, m=int(m))
    context.args.report = tk_statistics(context.args.params, context.primes, 0.1)
    context.args.px = admissible_primes(int(m), int(x), context.args.params.threshold, context.primes).tolist()


@then("B2 is about (?P<b2>[\\d.]+), G about (?P<g>[\\d.]+) and A about (?P<a>[\\d.]+)")
def step_impl(context, b2, g, a):
    report = context.args.report
    assert abs(report.b2 - float(b2)) < 1e-3
    assert abs(report.g - float(g)) < 1e-3
    assert abs(report.a - float(a)) < 1e-3


@then("the prime power sums match direct summation")
def step_impl(context):
    report = context.args.report
    b2, g, a = direct_sums(context.args.px, report.x)
    assert abs(report.b2 - b2) < 1e-12
    assert abs(report.g - g) < 1e-12
    assert abs(report.a - a) < 1e-12


@then("A equals B2 minus G to 1e-12")
def step_impl(context):
    report = context.args.report
    assert abs(report.a - (report.b2 - report.g)) <= 1e-12


@then("the counting function values match trial factorization")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    x = context.args.params.x
    px = set(context.args.px)
    f = omega_counts(x, np.array(context.args.px, dtype=np.int64))
    for n in range(1, x + 1):
        assert int(f[n]) == f_omega(n, px) == sum(1 for p in trial_factorize(n).primes if p in px), n


@then("the variance sum matches the direct one")
def step_impl(context):
    report = context.args.report
    px = set(context.args.px)
    x = report.x
    lhs = sum((f_omega(n, px) - report.a) ** 2 for n in range(1, x + 1)) / x
    assert abs(report.lhs - lhs) < 1e-9
    cut = report.b2 ** ((1 + report.epsilon) / 2)
    assert report.n_bad == sum(1 for n in range(1, x + 1) if abs(f_omega(n, px) - report.a) >= cut)
    assert sum(report.value_counts) == x


@then("G, A and B2 are sandwiched at (?P<xs>[\\d,]+) for m = (?P<m>\\d+)")
def step_impl(context, xs, m):
    for x in (int(part) for part in xs.split(",")):
        report = tk_statistics(SieveParams(x, 0.1, m=int(m)), context.primes, 0.1)
        assert not report.empty
        assert 0 < report.g < 1, report.to_row()
        assert report.b2 - 1 < report.a < report.b2, report.to_row()
        assert report.sandwich_holds
        assert report.exceeds_logsize


@then("the variance ratio stays within (?P<margin>[\\d.]+) at (?P<xs>[\\d,]+) for m = (?P<m>\\d+)")
def step_impl(context, margin, xs, m):
    for x in (int(part) for part in xs.split(",")):
        report = tk_statistics(SieveParams(x, 0.1, m=int(m)), context.primes, 0.1)
        holds, ratio = tk_inequality_check(report, float(margin))
        assert holds, ratio
        assert math.isclose(ratio, report.lhs / report.b2)


@then("the report is empty and not activated")
def step_impl(context):
    report = context.args.report
    assert report.empty
    assert not report.activated
    assert report.value_counts == [report.x]
    assert report.complement_s == report.x


@then("checking the inequality on it is an invalid argument")
def step_impl(context):
    try:
        tk_inequality_check(context.args.report, 4.0)
    except InvalidArgumentException:
        return
    assert False, "An empty P_x was checked"


@when("the S_x series for m = (?P<m>\\d+) is taken at (?P<xs>[\\d,]+)")
def step_impl(context, m, xs):
    """
    Parameters
    ----------
    context : behave.runner.Context
    m : str
    xs : str
    """
    checkpoints = [int(part) for part in xs.split(",")]
    context.args = SimpleNamespace()
    context.args.m = int(m)
    params = SieveParams(checkpoints[-1], 0.1, m=int(m))
    context.args.series, context.args.rows = sx_series(params, checkpoints, context.primes, 0.1)


@then("each count matches the prime factor mask")
def step_impl(context):
    for row in context.args.rows:
        params = SieveParams(row.x, 0.1, m=context.args.m)
        px = admissible_primes(context.args.m, row.x, params.threshold, context.primes).tolist()
        assert row.count == int(prime_factor_mask(row.x, px)[1:].sum())
    assert context.args.series.counts == [row.count for row in context.args.rows]


@then("each row carries its complement")
def step_impl(context):
    for row in context.args.rows:
        assert row.complement == row.x - row.count
        assert row.to_row()["complement"] == str(row.complement)


@then("f\\(ab\\) = f\\(a\\) \\+ f\\(b\\) for every coprime pair a < b up to (?P<limit>\\d+) with P_x of "
      "m = (?P<m>\\d+) at (?P<x>\\d+)")
def step_impl(context, limit, m, x):
    """
    Parameters
    ----------
    context : behave.runner.Context
    limit : str
    m : str
    x : str
    """
    params = SieveParams(int(x), 0.1, m=int(m))
    px = set(admissible_primes(params.m, params.x, params.threshold, context.primes).tolist())
    limit = int(limit)
    f = [0] + [f_omega(n, px) for n in range(1, limit + 1)]
    assert any(f)
    for a in range(1, limit + 1):
        for b in range(a + 1, limit + 1):
            if math.gcd(a, b) == 1:
                assert f_omega(a * b, px) == f[a] + f[b], (a, b)


@then("the logarithmic size of P_x is B2 without the square of (?P<p>\\d+)")
def step_impl(context, p):
    report = context.args.report
    assert abs(report.px_logsize - sum(1.0 / q for q in context.args.px)) < 1e-12
    assert abs(report.px_logsize - (report.b2 - 1.0 / int(p) ** 2)) < 1e-12
    assert report.exceeds_logsize
    assert report.to_row()["exceeds_logsize"] == "1"


@then("the scaled bad count is n_bad B2\\^epsilon over x")
def step_impl(context):
    report = context.args.report
    assert math.isclose(report.scaled_bad_count, report.n_bad * report.b2 ** report.epsilon / report.x)
    assert "scaled_bad_count" in report.to_row()
