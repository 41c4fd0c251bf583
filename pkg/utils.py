import time
from contextlib import contextmanager

import config


def round_seconds(value, precision=config.TIMING_PRECISION):
    try:
        return round(float(value), precision)
    except Exception:
        return value


@contextmanager
def timed(timings, key):
    """Record the wall time of the block under ``timings[key]`` (seconds)."""
    start = time.perf_counter()
    try:
        yield
    finally:
        timings[key] = round_seconds(time.perf_counter() - start)


def format_power(p, s):
    return str(p) if s == 1 else f"{p}^{s}"


if __name__ == "__main__":
    timings = {}
    with timed(timings, "sleep"):
        time.sleep(0.01)
    print("Timed block:", timings)
    print("Power:", format_power(2, 6), "->", 2 ** 6)
