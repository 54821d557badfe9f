import os
import shutil
import tempfile
from types import SimpleNamespace

from behave import *

from triangle_density.arith import primes_up_to
from triangle_density.cache import DefaultPrimeTableCodec, PrimeTableProviderImpl, resolve_cache_dir
from triangle_density.config import Config
from triangle_density.errors import PrimeTableFormatException

use_step_matcher("re")


@given("an empty cache directory")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    context.args = SimpleNamespace()
    context.args.cache_dir = tempfile.mkdtemp(prefix="td-cache-")
    context.add_cleanup(shutil.rmtree, context.args.cache_dir, True)
    context.args.codec = DefaultPrimeTableCodec()


@given("a cache file for (?P<limit>\\d+) with a bad magic")
def step_impl(context, limit):
    """
    Parameters
    ----------
    context : behave.runner.Context
    limit : str
    """
    content = context.args.codec.encode(primes_up_to(int(limit)))
    provider = PrimeTableProviderImpl(context.args.codec, context.args.cache_dir)
    with open(provider.path_of(int(limit)), "wb") as f:
        f.write(b"XXXX" + content[4:])


@when("a provider asks for the table up to (?P<limit>\\d+)")
def step_impl(context, limit):
    """
    Parameters
    ----------
    context : behave.runner.Context
    limit : str
    """
    context.args.provider = PrimeTableProviderImpl(context.args.codec, context.args.cache_dir)
    context.args.table = context.args.provider.table(int(limit))


@then("the cache holds a file for (?P<limit>\\d+) starting with the format magic")
def step_impl(context, limit):
    """
    Parameters
    ----------
    context : behave.runner.Context
    limit : str
    """
    path = context.args.provider.path_of(int(limit))
    assert os.path.exists(path)
    with open(path, "rb") as f:
        assert f.read(4) == Config.cache_magic
    # No temporary files left behind by the atomic write
    assert os.listdir(context.args.cache_dir) == [os.path.basename(path)]


@then("a fresh provider loads the same table from the cache")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    provider = PrimeTableProviderImpl(context.args.codec, context.args.cache_dir)
    loaded = provider.load(context.args.table.limit)
    assert loaded is not None
    assert loaded == context.args.table
    assert loaded.primes.tolist() == context.args.table.primes.tolist()


@then("the table equals a freshly sieved one")
def step_impl(context):
    """
    Parameters
    ----------
    context : behave.runner.Context
    """
    assert context.args.table == primes_up_to(context.args.table.limit)


@then("the cache file for (?P<limit>\\d+) decodes again")
def step_impl(context, limit):
    """
    Parameters
    ----------
    context : behave.runner.Context
    limit : str
    """
    with open(context.args.provider.path_of(int(limit)), "rb") as f:
        assert context.args.codec.decode(f.read()) == context.args.table


def malformed(codec: DefaultPrimeTableCodec, kind: str) -> bytes:
    content = codec.encode(primes_up_to(1000))
    if kind == "a truncated header":
        return content[:7]
    if kind == "a foreign magic":
        return b"ABCD" + content[4:]
    if kind == "an unknown version":
        return codec.header.pack(Config.cache_magic, Config.cache_version + 1, 1000) + content[codec.header.size:]
    if kind == "a short payload":
        return content[:-8]
    raise ValueError(kind)


@then("decoding (?P<kind>.+) raises a format error")
def step_impl(context, kind):
    """
    Parameters
    ----------
    context : behave.runner.Context
    kind : str
    """
    codec = DefaultPrimeTableCodec()
    try:
        codec.decode(malformed(codec, kind))
    except PrimeTableFormatException:
        return
    assert False, "%s was accepted" % kind


@given("the cache environment variable is set to (?P<path>\\S+)")
def step_impl(context, path):
    """
    Parameters
    ----------
    context : behave.runner.Context
    path : str
    """
    previous = os.environ.get(Config.cache_env_var)

    def restore():
        if previous is None:
            os.environ.pop(Config.cache_env_var, None)
        else:
            os.environ[Config.cache_env_var] = previous

    context.add_cleanup(restore)
    os.environ[Config.cache_env_var] = path


@then("the resolved cache directory is (?P<path>\\S+)")
def step_impl(context, path):
    assert resolve_cache_dir(None) == path


@then("an explicit (?P<path>\\S+) overrides it")
def step_impl(context, path):
    assert resolve_cache_dir(path) == path
