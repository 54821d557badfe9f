from types import SimpleNamespace

from behave import *
from sympy.combinatorics import Permutation, PermutationGroup

from triangle_density.errors import BudgetExhaustedException, InvalidArgumentException, \
    InvariantViolationException
from triangle_density.event_logger import EventLogger
from triangle_density.models import CosetTable, Geometry, SieveParams, TriangleSignature
from triangle_density.triangle.catalog import cross_check, quotient_orders
from triangle_density.triangle.coset import SearchBudget, check_table, low_index_tables
from triangle_density.triangle.exclusion import prop_b_excludes
from triangle_density.triangle.perm_group import group_order, image_order
from triangle_density.triangle.signature import classify, euclidean_density_series, euclidean_smooth_orders

use_step_matcher("re")


def parse_ints(text: str):
    return [int(part) for part in text.split(",")] if text else []


def sympy_order(degree: int, generators) -> int:
    return PermutationGroup([Permutation(list(g), size=degree) for g in generators]).order()


@then("the signature (?P<rst>[\\d,]+) is (?P<geometry>[A-Z]+)")
def step_impl(context, rst, geometry):
    assert classify(TriangleSignature.parse(rst)) == Geometry[geometry]


@then("parsing the signature (?P<rst>[\\d,]+) is an invalid argument")
def step_impl(context, rst):
    try:
        TriangleSignature.parse(rst)
    except InvalidArgumentException:
        return
    assert False, "%s was parsed" % rst


@then("the smooth orders of (?P<rst>[\\d,]+) up to (?P<limit>\\d+) are (?P<orders>[\\d,]+)")
def step_impl(context, rst, limit, orders):
    assert euclidean_smooth_orders(TriangleSignature.parse(rst), int(limit)) == parse_ints(orders)


@when("the smooth order density of (?P<rst>[\\d,]+) is taken at (?P<xs>[\\d,]+)")
def step_impl(context, rst, xs):
    """
    Parameters
    ----------
    context : behave.runner.Context
    rst : str
    xs : str
    """
    context.args = SimpleNamespace()
    context.args.series = euclidean_density_series(TriangleSignature.parse(rst), parse_ints(xs))


@then("the density at (?P<high>\\d+) is below (?P<bound>[\\d.]+) and below the one at (?P<low>\\d+)")
def step_impl(context, high, bound, low):
    series = context.args.series
    assert float(series.ratio_at(int(high))) < float(bound)
    assert series.ratio_at(int(high)) < series.ratio_at(int(low))


@then("the coset tables of \\((?P<rst>[\\d,]+)\\) up to index (?P<index>\\d+) have degrees (?P<degrees>[\\d,]+)")
def step_impl(context, rst, index, degrees):
    tables = list(low_index_tables(TriangleSignature.parse(rst), int(index)))
    assert sorted(table.degree for table in tables) == parse_ints(degrees)


@then("the regular coset tables of \\((?P<rst>[\\d,]+)\\) up to index (?P<index>\\d+) have degrees (?P<degrees>[\\d,]+)")
def step_impl(context, rst, index, degrees):
    tables = list(low_index_tables(TriangleSignature.parse(rst), int(index), normal_only=True))
    assert sorted(table.degree for table in tables) == parse_ints(degrees)
    assert all(image_order(table) == table.degree for table in tables)


@given("an event logger")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    context.args = SimpleNamespace()
    context.args.event_logger = EventLogger()


@when("the coset tables of \\((?P<rst>[\\d,]+)\\) up to index (?P<index>\\d+) are enumerated")
def step_impl(context, rst, index):
    """
    Parameters
    ----------
    context : behave.runner.Context
    rst : str
    index : str
    """
    context.args.signature = TriangleSignature.parse(rst)
    context.args.tables = list(low_index_tables(context.args.signature, int(index),
                                                listeners=[context.args.event_logger]))


@then("every table traces the relators and is transitive")
def step_impl(context):
    for table in context.args.tables:
        check_table(table, context.args.signature)


@then("the image orders agree with sympy")
def step_impl(context):
    for table in context.args.tables:
        assert image_order(table) == sympy_order(table.degree, [table.x_action, table.y_action]), table


@then("the image orders are (?P<orders>[\\d,]+)")
def step_impl(context, orders):
    assert sorted({image_order(table) for table in context.args.tables}) == parse_ints(orders)


@then("the event logger counted every table")
def step_impl(context):
    assert context.args.event_logger.tables_found == len(context.args.tables)
    assert context.args.event_logger.nodes > 0


@when("the quotient orders of \\((?P<rst>[\\d,]+)\\) up to (?P<max_order>\\d+) are listed")
def step_impl(context, rst, max_order):
    """
    Parameters
    ----------
    context : behave.runner.Context
    rst : str
    max_order : str
    """
    context.args = SimpleNamespace()
    context.args.catalog = quotient_orders(TriangleSignature.parse(rst), int(max_order), int(max_order))


@then("the orders are (?P<orders>[\\d,]+)")
def step_impl(context, orders):
    assert context.args.catalog.orders == parse_ints(orders)


@then("the smooth orders are (?P<orders>[\\d,]+)")
def step_impl(context, orders):
    assert context.args.catalog.smooth_orders == parse_ints(orders)


@then("the catalog is complete up to (?P<order>\\d+)")
def step_impl(context, order):
    catalog = context.args.catalog
    assert not catalog.partial
    assert catalog.complete_up_to == int(order)
    assert catalog.document()["orders"] == catalog.orders


@then("listing the quotient orders of \\((?P<rst>[\\d,]+)\\) up to (?P<max_order>\\d+) with a budget of "
      "(?P<budget>\\d+) stops with a partial catalog")
def step_impl(context, rst, max_order, budget):
    try:
        quotient_orders(TriangleSignature.parse(rst), int(max_order), int(max_order), SearchBudget(int(budget)))
    except BudgetExhaustedException as e:
        assert e.partial.partial
        assert e.partial.complete_up_to < int(max_order)
        return
    assert False, "The budget did not run out"


@then("the table x = (?P<x>[\\d,]+) and y = (?P<y>[\\d,]+) fails the check for \\((?P<rst>[\\d,]+)\\)")
def step_impl(context, x, y, rst):
    try:
        check_table(CosetTable(parse_ints(x), parse_ints(y)), TriangleSignature.parse(rst))
    except InvariantViolationException:
        return
    assert False, "A broken table passed"


@then("the group on (?P<degree>\\d+) points generated by (?P<generators>[\\d, ]+) has order (?P<order>\\d+)")
def step_impl(context, degree, generators, order):
    generators = [parse_ints(g) for g in generators.split()]
    assert group_order(int(degree), generators) == int(order)
    assert sympy_order(int(degree), generators) == int(order)


@then("the group on (?P<degree>\\d+) points generated by (?P<generators>[\\d, ]+) is beyond a cap of (?P<cap>\\d+)")
def step_impl(context, degree, generators, cap):
    generators = [parse_ints(g) for g in generators.split()]
    assert group_order(int(degree), generators, cap=int(cap)) is None


@then("the exclusion of (?P<n>\\d+) for \\((?P<rst>[\\d,]+)\\) is (?P<excluded>True|False) with witness "
      "(?P<witness>\\d+|None)")
def step_impl(context, n, rst, excluded, witness):
    expected = (excluded == "True", None if witness == "None" else int(witness))
    assert prop_b_excludes(int(n), TriangleSignature.parse(rst), context.primes) == expected


@when("\\((?P<rst>[\\d,]+)\\) is cross-checked at x = (?P<x>\\d+) up to (?P<max_n>\\d+) with a budget of "
      "(?P<budget>\\d+)")
def step_impl(context, rst, x, max_n, budget):
    """
    Parameters
    ----------
    context : behave.runner.Context
    rst : str
    x : str
    max_n : str
    budget : str
    """
    signature = TriangleSignature.parse(rst)
    context.args = SimpleNamespace()
    context.args.signature = signature
    context.args.report = cross_check(signature, SieveParams(int(x), 0.1, signature), int(max_n), int(max_n),
                                      context.primes, SearchBudget(int(budget)))


@then("there are no violations")
def step_impl(context):
    assert context.args.report.violations == []


@then("no directly excluded value is a quotient order")
def step_impl(context):
    report = context.args.report
    for hit in report.hits:
        if hit.prop_b_witness is not None:
            assert hit.n not in report.catalog


@then("(?P<n>\\d+) is among the excluded values")
def step_impl(context, n):
    assert int(n) in [hit.n for hit in context.args.report.hits]


@then("the cross-check catalog is complete up to (?P<max_n>\\d+)")
def step_impl(context, max_n):
    report = context.args.report
    assert not report.partial
    assert report.catalog.complete_up_to == int(max_n)
