import csv
import importlib.util
import json
import os
import shutil
import tempfile
from types import SimpleNamespace

from behave import *

from triangle_density import runner as report_runner
from triangle_density.models import ExitStatus, RunConfig, TKReport, TriangleSignature
from triangle_density.runner_factory import build_runner

use_step_matcher("re")

SCRIPT = os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "scripts", "triangle-density.py")


def load_script():
    spec = importlib.util.spec_from_file_location("triangle_density_script", SCRIPT)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def workspace(context) -> str:
    path = tempfile.mkdtemp(prefix="td-run-")
    context.add_cleanup(shutil.rmtree, path, True)
    return path


@given("the command line (?P<line>.+)")
def step_impl(context, line):
    """
    Parameters
    ----------
    context : behave.runner.Context
    line : str
        Arguments after the script name; --out and --cache-dir point into a scratch directory
    """
    context.args = SimpleNamespace()
    context.args.script = load_script()
    context.args.workdir = workspace(context)
    context.args.out = os.path.join(context.args.workdir, "report.out")
    context.args.cache_dir = os.path.join(context.args.workdir, "cache")
    argv = line.split() + ["--out", context.args.out, "--cache-dir", context.args.cache_dir]
    context.args.arguments = vars(context.args.script.create_parser().parse_args(argv))


@given("a figure path")
def step_impl(context):
    context.args.figure = os.path.join(context.args.workdir, "series.png")
    context.args.arguments["plot"] = context.args.figure


@given("a corrupt cached table up to (?P<limit>\\d+)")
def step_impl(context, limit):
    os.makedirs(context.args.cache_dir, exist_ok=True)
    with open(os.path.join(context.args.cache_dir, "primes-%s.tdpr" % limit), "wb") as f:
        f.write(b"not a prime table")


@given("a run configuration for cross-check without --max-n")
def step_impl(context):
    context.args = SimpleNamespace()
    context.args.config = RunConfig("cross-check", signature=TriangleSignature(3, 5, 7), x=10 ** 6)


@then("the arguments do not validate")
def step_impl(context):
    assert not context.args.script.validate_args(context.args.arguments)


@when("it runs")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    arguments = context.args.arguments
    assert context.args.script.validate_args(arguments)
    runner = build_runner(arguments["cache_dir"])
    context.args.status = runner.run(context.args.script.build_config(arguments))


@then("running it exits with status (?P<status>\\d+)")
def step_impl(context, status):
    if hasattr(context.args, "config"):
        config = context.args.config
        cache_dir = None
    else:
        config = context.args.script.build_config(context.args.arguments)
        cache_dir = context.args.cache_dir
    assert build_runner(cache_dir).run(config) == ExitStatus(int(status))


@then("it exits with status (?P<status>\\d+)")
def step_impl(context, status):
    assert context.args.status == ExitStatus(int(status))


def read_output(context) -> str:
    with open(context.args.out, newline="") as f:
        return f.read()


@then("the JSON document lists the orders (?P<orders>[\\d,]+)")
def step_impl(context, orders):
    document = json.loads(read_output(context))
    assert document["orders"] == [int(order) for order in orders.split(",")]
    assert document["signature"] == [2, 3, 3]
    assert document["partial"] is False


@then("the JSON document is flagged partial")
def step_impl(context):
    document = json.loads(read_output(context))
    assert document["partial"] is True
    assert document["complete_up_to"] < document["max_index"]


@then("the CSV header is (?P<header>\\S+)")
def step_impl(context, header):
    assert read_output(context).split("\n")[0] == header


@then("the CSV has (?P<rows>\\d+) rows")
def step_impl(context, rows):
    assert len(list(csv.DictReader(read_output(context).splitlines()))) == int(rows)


@then("the JSON array has (?P<rows>\\d+) rows of kinds (?P<kinds>[\\w,]+)")
def step_impl(context, rows, kinds):
    document = json.loads(read_output(context))
    assert len(document) == int(rows)
    assert [row["kind"] for row in document] == kinds.split(",")
    assert all(row["holds"] == "1" for row in document if row["kind"] != "B3")


@then("the figure was written")
def step_impl(context):
    assert os.path.getsize(context.args.figure) > 0


@when("it runs twice")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    arguments = context.args.arguments
    context.args.statuses = []
    context.args.outputs = []
    for _ in range(2):
        # The second run reads the prime table the first one cached
        runner = build_runner(arguments["cache_dir"])
        context.args.statuses.append(runner.run(context.args.script.build_config(arguments)))
        with open(context.args.out, "rb") as f:
            context.args.outputs.append(f.read())


@then("both runs exit with status (?P<status>\\d+) and write identical bytes")
def step_impl(context, status):
    assert context.args.statuses == [ExitStatus(int(status))] * 2
    assert len(context.args.outputs[0]) > 0
    assert context.args.outputs[0] == context.args.outputs[1]


@then("every row has (?P<field>\\w+) = (?P<value>\\S+)")
def step_impl(context, field, value):
    rows = list(csv.DictReader(read_output(context).splitlines()))
    assert rows
    assert all(row[field] == value for row in rows), rows


@given("statistics with B2 = (?P<b2>[\\d.]+) below a logarithmic size of (?P<logsize>[\\d.]+)")
def step_impl(context, b2, logsize):
    """
    Replace the runner's statistics with a report whose sandwich and ratio hold but whose B2 is too small

    Parameters
    ----------
    context : behave.runner.Context
    b2 : str
    logsize : str
    """
    b2, logsize = float(b2), float(logsize)

    def statistics(params, table, epsilon):
        return TKReport(params.x, params.m, params.delta, epsilon, 1, b2 - 0.05, b2, 0.05, b2, 0, logsize,
                        [params.x])

    original = report_runner.tk_statistics
    report_runner.tk_statistics = statistics
    context.add_cleanup(setattr, report_runner, "tk_statistics", original)


@then("no prime table was cached")
def step_impl(context):
    assert not os.path.exists(context.args.cache_dir) or not os.listdir(context.args.cache_dir)
