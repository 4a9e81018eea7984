u"""The "lagfib" logger and the named verbosity levels accepted by the CLI and ini files.

Messages are bare text on stderr; stdout carries only results, so that
``lagfib census --format csv > census.csv`` stays clean.
"""
import logging
import sys
from contextlib import contextmanager
from timeit import default_timer

NOISY = 15

# name -> verbosity; the logging level is 50 - verbosity
verbosity_levels = {
    "debug": 40,
    "noisy": 35,
    "standard": 30,
    "normal": 30,
    "quiet": 20,
    "muted": 10,
    "silent": -1,
}


class CurrentStderrHandler(logging.StreamHandler):
    u"""A stream handler bound to whatever ``sys.stderr`` is when a record is emitted."""

    def __init__(self):
        super().__init__(sys.stderr)

    @property
    def stream(self):
        return sys.stderr

    @stream.setter
    def stream(self, value):
        pass


logger = logging.getLogger("lagfib")
logger.propagate = False
handler = CurrentStderrHandler()
handler.setFormatter(logging.Formatter('%(message)s'))
logger.addHandler(handler)


def parse_verbosity(verb):
    u"""Turn a level name or an integer 0 (silent) - 50 (everything) into a verbosity number."""
    if isinstance(verb, int):
        return verb
    text = str(verb).strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return verbosity_levels[text.lower()]
    except KeyError:
        valid_levels = ', '.join(verbosity_levels)
        raise ValueError(f"Unknown verbosity '{verb}'. Use an integer 0 (silent) - 50 "
                         f"(everything) or one of: {valid_levels}")


def set_verbosity(verb):
    verb = parse_verbosity(verb)
    set_level(50 - verb)
    debug(f"lagfib verbosity set to {verb}")


def set_level(level):
    logger.setLevel(level)
    handler.setLevel(level)


def get_level():
    return logger.getEffectiveLevel()


def debug(message):
    logger.log(logging.DEBUG, message)

def noisy(message):
    logger.log(NOISY, message)

def info(message):
    logger.log(logging.INFO, message)

def warning(message):
    logger.log(logging.WARNING, message)

def overview(message):
    logger.log(logging.WARNING, message)

def error(message):
    logger.log(logging.ERROR, message)

def important(message):
    logger.log(logging.ERROR, message)

def critical(message):
    logger.log(logging.CRITICAL, message)



@contextmanager
def timed(label):
    u"""Log the wall-clock time taken by the enclosed block at the noisy level."""
    start = default_timer()
    try:
        yield
    finally:
        noisy(f"{label}: {default_timer() - start:.3f}s")


set_verbosity("standard")
