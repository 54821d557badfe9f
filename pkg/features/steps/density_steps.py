from fractions import Fraction
from types import SimpleNamespace

from behave import *

from triangle_density.density import CheckpointListener, density_series, dx_count, logarithmic_size, \
    series_from_mask
from triangle_density.errors import InvalidArgumentException
from triangle_density.summation import compensated_sum

use_step_matcher("re")


class RecordingListener(CheckpointListener):
    def __init__(self):
        self.seen = []

    def on_checkpoint(self, series: str, x: int, count: int) -> None:
        self.seen.append((series, x, count))


def parse_ints(text: str):
    return [int(part) for part in text.split(",")]


@then("the multiples of 3 up to 100 number 33 with ratio 33/100")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    count, ratio = dx_count(lambda n: n % 3 == 0, 100)
    assert count == 33
    assert ratio == Fraction(33, 100)


@given("a recording checkpoint listener")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    context.args = SimpleNamespace()
    context.args.listener = RecordingListener()


@when("the even numbers are tabulated at (?P<checkpoints>[\\d,]+)")
def step_impl(context, checkpoints):
    """
    Parameters
    ----------
    context : behave.runner.Context
    checkpoints : str
    """
    context.args.series = density_series(lambda n: n % 2 == 0, parse_ints(checkpoints), [context.args.listener],
                                         name="even")


@when("the prime mask is tabulated at (?P<checkpoints>[\\d,]+)")
def step_impl(context, checkpoints):
    """
    Parameters
    ----------
    context : behave.runner.Context
    checkpoints : str
    """
    checkpoints = parse_ints(checkpoints)
    context.args = SimpleNamespace()
    context.args.series = series_from_mask(context.primes.mask(max(checkpoints)), checkpoints)
    streamed = density_series(context.primes.is_prime, checkpoints)
    assert streamed.counts == context.args.series.counts


@then("the counts are (?P<counts>[\\d,]+)")
def step_impl(context, counts):
    assert context.args.series.counts == parse_ints(counts)


@then("every ratio is (?P<numerator>\\d+)/(?P<denominator>\\d+)")
def step_impl(context, numerator, denominator):
    assert all(r == Fraction(int(numerator), int(denominator)) for r in context.args.series.ratios)


@then("the listener saw (?P<n>\\d+) checkpoints")
def step_impl(context, n):
    seen = context.args.listener.seen
    assert len(seen) == int(n)
    assert [x for _, x, _ in seen] == context.args.series.checkpoints
    assert all(series == "even" for series, _, _ in seen)


@then("the row for (?P<x>\\d+) reads (?P<row>[\\d.,]+)")
def step_impl(context, x, row):
    """
    Parameters
    ----------
    context : behave.runner.Context
    x : str
    row : str
        x,count,ratio as written to CSV
    """
    rows = {r["x"]: r for r in context.args.series.rows()}
    assert ",".join(rows[x][field] for field in ("x", "count", "ratio")) == row


@then("tabulating at (?P<checkpoints>[\\d,]+) is an invalid argument")
def step_impl(context, checkpoints):
    try:
        density_series(lambda n: True, parse_ints(checkpoints))
    except InvalidArgumentException:
        return
    assert False, "Descending checkpoints were accepted"


@then("the compensated sum of 1e16, 1.0 and -1e16 is exactly 1.0")
def step_impl(context):
    assert compensated_sum([1e16, 1.0, -1e16]) == 1.0


@then("the logarithmic size of (?P<elements>[\\d,]+) is (?P<value>[\\d.]+)")
def step_impl(context, elements, value):
    assert logarithmic_size(parse_ints(elements)) == float(value)
