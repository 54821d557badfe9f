from triangle_density.arith import primes_up_to


def before_all(context):
    """
    One prime table up to 10^6 shared by every scenario

    Parameters
    ----------
    context : behave.runner.Context
    """
    context.primes = primes_up_to(10 ** 6)
