import multiprocessing


class Pool(object):
    u"""Shared-memory worker pool used for the embarrassingly parallel census.

    ``map`` keeps the order of its arguments, so callers get the same
    result as a serial loop.
    """
    def __init__(self, processes):
        if processes < 1:
            raise ValueError(f"A pool needs at least one process, not {processes}")
        self.size = processes
        self._pool = None

    def map(self, function, args):
        args = list(args)
        if self._pool is None:
            with multiprocessing.Pool(self.size) as pool:
                return pool.map(function, args)
        return self._pool.map(function, args)

    def __enter__(self):
        self._pool = multiprocessing.Pool(self.size)
        return self

    def __exit__(self, *args):
        self._pool.close()
        self._pool.join()
        self._pool = None
