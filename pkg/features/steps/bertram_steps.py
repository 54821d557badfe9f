import math
from types import SimpleNamespace

from behave import *

from triangle_density.arith import divisors, factorize
from triangle_density.bertram import complement_bound, congruent_divisor_mask, count_b1, count_b2, count_b3, \
    in_Kx, kx_mask, kx_series, square_factor_mask
from triangle_density.dirichlet import threshold_of
from triangle_density.models import ExceptionKind, SieveParams, TriangleSignature

use_step_matcher("re")


@when("the (?P<kind>B1|B2) set is counted at (?P<x>\\d+) with f = (?P<f>[\\d.]+)")
def step_impl(context, kind, x, f):
    """
    Parameters
    ----------
    context : behave.runner.Context
    kind : str
    x : str
    f : str
    """
    context.args = SimpleNamespace()
    count = count_b1 if kind == "B1" else count_b2
    context.args.report = count(int(x), float(f), context.primes)
    assert context.args.report.kind == ExceptionKind[kind]


@then("the count is (?P<count>\\d+) below the bound (?P<bound>[\\d.]+)")
def step_impl(context, count, bound):
    report = context.args.report
    assert report.count == int(count)
    assert abs(report.bound - float(bound)) < 0.1
    assert report.holds


@then("its only member up to (?P<x>\\d+) is (?P<n>\\d+)")
def step_impl(context, x, n):
    mask = congruent_divisor_mask(int(x), context.args.report.params["f"], context.primes)
    assert mask.nonzero()[0].tolist() == [int(n)]


@when("the B3 set is counted at (?P<x>\\d+) with g = (?P<g>[\\d.]+) and h = (?P<h>[\\d.]+)")
def step_impl(context, x, g, h):
    """
    Parameters
    ----------
    context : behave.runner.Context
    x : str
    g : str
    h : str
    """
    context.args = SimpleNamespace()
    context.args.report = count_b3(int(x), float(g), float(h), 2.0, context.primes)


@then("the exceptional count is (?P<count>\\d+)")
def step_impl(context, count):
    assert context.args.report.count == int(count)


@then("the least valid constant makes the bound tight")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    report = context.args.report
    x, g, h = report.x, report.params["g"], report.params["h"]
    assert abs(x * (math.log(g) + report.minimal_c) / math.log(h) - report.count) < 1e-9


@then("the B1 and B2 counts stay below their bounds at (?P<xs>[\\d,]+)")
def step_impl(context, xs):
    for x in (int(part) for part in xs.split(",")):
        f = threshold_of(x, 0.1)
        b1 = count_b1(x, f, context.primes)
        b2 = count_b2(x, f, context.primes)
        assert b1.holds, b1.to_row()
        assert b2.holds, b2.to_row()


@then("the B1 and B2 masks at (?P<x>\\d+) with f = (?P<f>[\\d.]+) match a divisor scan")
def step_impl(context, x, f):
    """
    Parameters
    ----------
    context : behave.runner.Context
    x : str
    f : str
    """
    x, f = int(x), float(f)
    squares = square_factor_mask(x, f, context.primes)
    congruent = congruent_divisor_mask(x, f, context.primes)
    for n in range(1, x + 1):
        factorization = factorize(n, context.primes)
        divs = divisors(factorization)
        large = [p for p in factorization.primes if p > f]
        assert squares[n] == any(factorization.exponent(p) > 1 for p in large), n
        assert congruent[n] == any(any(d % p == 1 for d in divs[1:]) for p in large), n


@then("(?P<n>\\d+) is in K_x at (?P<x>\\d+) for \\((?P<rst>[\\d,]+)\\) with witness (?P<p>\\d+)")
def step_impl(context, n, x, rst, p):
    params = SieveParams(int(x), 0.1, TriangleSignature.parse(rst))
    assert in_Kx(int(n), params, context.primes) == (True, int(p))


@then("(?P<n>\\d+) is not in K_x at (?P<x>\\d+) for \\((?P<rst>[\\d,]+)\\)")
def step_impl(context, n, x, rst):
    params = SieveParams(int(x), 0.1, TriangleSignature.parse(rst))
    assert in_Kx(int(n), params, context.primes) == (False, None)


@then("the K_x mask at (?P<x>\\d+) for \\((?P<rst>[\\d,]+)\\) with delta (?P<delta>[\\d.]+) matches in_Kx")
def step_impl(context, x, rst, delta):
    params = SieveParams(int(x), float(delta), TriangleSignature.parse(rst))
    mask = kx_mask(params, context.primes)
    assert mask.any()
    for n in range(1, params.x + 1):
        assert bool(mask[n]) == in_Kx(n, params, context.primes)[0], n


@when("the K_x series of \\((?P<rst>[\\d,]+)\\) is taken at (?P<xs>[\\d,]+)")
def step_impl(context, rst, xs):
    """
    Parameters
    ----------
    context : behave.runner.Context
    rst : str
    xs : str
    """
    checkpoints = [int(part) for part in xs.split(",")]
    context.args = SimpleNamespace()
    params = SieveParams(checkpoints[-1], 0.1, TriangleSignature.parse(rst))
    context.args.series, context.args.rows = kx_series(params, checkpoints, context.primes)


@then("the complement decomposition holds at every checkpoint")
def step_impl(context):
    for row in context.args.rows:
        assert row.identity_holds, row.to_row()
        assert row.complement <= row.comp_s + row.comp_g + row.comp_h


@then("the K_x density at (?P<high>\\d+) exceeds the one at (?P<low>\\d+)")
def step_impl(context, high, low):
    series = context.args.series
    assert series.ratio_at(int(high)) > series.ratio_at(int(low))


@when("the complement bound of \\((?P<rst>[\\d,]+)\\) is taken at (?P<xs>[\\d,]+)")
def step_impl(context, rst, xs):
    """
    Parameters
    ----------
    context : behave.runner.Context
    rst : str
    xs : str
    """
    checkpoints = [int(part) for part in xs.split(",")]
    context.args = SimpleNamespace()
    params = SieveParams(checkpoints[-1], 0.1, TriangleSignature.parse(rst))
    context.args.reports = complement_bound(params, checkpoints, context.primes, 0.1)


@then("each complement equals x minus the K_x count")
def step_impl(context):
    for report in context.args.reports:
        checkpoint = report.checkpoint
        assert checkpoint.complement == checkpoint.x - checkpoint.kx_count
        assert report.n_measured == checkpoint.b1_bound + checkpoint.b2_bound + report.n_bad


@then("the bound holds wherever the Turan-Kubilius activation does")
def step_impl(context):
    for report in context.args.reports:
        if report.tk_activated:
            assert report.holds, report.to_row()


@then("the K_x mask at (?P<x>\\d+) for \\((?P<rst>[\\d,]+)\\) shrinks over delta (?P<deltas>[\\d.,]+)")
def step_impl(context, x, rst, deltas):
    signature = TriangleSignature.parse(rst)
    masks = [kx_mask(SieveParams(int(x), float(delta), signature), context.primes) for delta in deltas.split(",")]
    for wider, narrower in zip(masks, masks[1:]):
        assert not (narrower & ~wider).any()
