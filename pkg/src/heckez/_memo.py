"""Thread-safe memoization with at-most-once computation per key."""

from __future__ import annotations

import functools
import threading


def memoized(func):
    """Cache `func` on its (hashable) positional arguments.

    Concurrent callers asking for the same key block on a per-key lock, so the
    body runs at most once per key; readers of finished entries take no lock.
    """
    cache: dict = {}
    locks: dict = {}
    guard = threading.Lock()

    @functools.wraps(func)
    def wrapper(*args):
        try:
            return cache[args]
        except KeyError:
            pass
        with guard:
            lock = locks.setdefault(args, threading.Lock())
        with lock:
            if args not in cache:
                cache[args] = func(*args)
        return cache[args]

    def cache_clear():
        with guard:
            cache.clear()
            locks.clear()

    wrapper.cache_clear = cache_clear
    wrapper.cache = cache
    return wrapper
