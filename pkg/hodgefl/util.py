"""
Small helpers shared by the configuration layer and the Weyl engine.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import importlib.machinery
import importlib.util
import logging
import sys
from contextlib import contextmanager
from functools import wraps


log = logging.getLogger(__name__)


def memoized(f):
    """
    Cache the results of ``f`` by its arguments.

    Used for monomial products in the Weyl engine, which are requested over
    and over with the same normal-ordered monomials. Calls with unhashable
    arguments bypass the cache.
    """
    cache = {}

    @wraps(f)
    def _memoized(*args, **kwargs):
        key = args + tuple(sorted(kwargs.items()))
        try:
            return cache[key]
        except KeyError:
            pass
        except TypeError:
            return f(*args, **kwargs)
        cache[key] = result = f(*args, **kwargs)
        return result
    _memoized.cache = cache
    return _memoized


def load_config(filename):
    """
    Execute a configuration file and return it as a module.

    The file is Python source (``~/.hodgeflrc`` has no ``.py`` suffix); no
    bytecode is written next to it.

    :param filename: path of the configuration file
    :type filename: str
    :raises: :class:`IOError` if the file does not exist
    """
    loader = importlib.machinery.SourceFileLoader('hodgeflrc', filename)
    spec = importlib.util.spec_from_loader('hodgeflrc', loader)
    config = importlib.util.module_from_spec(spec)
    with disable_write_bytecode():
        loader.exec_module(config)

    log.info('Loaded configuration from {0}'.format(filename))
    return config


def get_config_attribute(config, name, default_value):
    """
    ``config.name`` if the configuration module sets it, else
    ``default_value``. ``config`` may be ``None``.
    """
    return getattr(config, name, default_value) if config is not None else default_value


@contextmanager
def disable_write_bytecode():
    old_state = sys.dont_write_bytecode
    sys.dont_write_bytecode = True
    try:
        yield
    finally:
        sys.dont_write_bytecode = old_state


def default(value, replacement):
    """
    ``replacement`` if ``value`` is ``None``, else ``value``. Falsy values
    such as ``0`` are kept.
    """
    return value if value is not None else replacement
