"""
Run configuration: defaults, overridden by the configuration file, overridden
by command line flags.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
import os

from hodgefl.util import load_config, get_config_attribute, default


log = logging.getLogger(__name__)

DEFAULT_CONFIG = os.path.join('~', '.hodgeflrc')

DEFAULTS = {
    'SEED': 0,
    'DEGREE_BOUND': 6,
    'SAMPLE_COUNT': 200,
    'FORMAT': 'text',
    'LOGFILE': None,
    'CORPUS_SIZE': 50,
    'LATTICE_BOUND': 0,
    'TORUS_POINTS': 25,
}

FORMATS = ('text', 'json')


class ConfigError(Exception):
    """
    Signals an unreadable configuration file or an invalid setting.
    """
    pass


class RunConfig(object):
    """
    The settings of one run.
    """

    def __init__(self, seed=0, degree_bound=6, sample_count=200, output=None,
                 format='text', logfile=None, corpus_size=50, lattice_bound=0,
                 torus_points=25):
        """
        :param seed: seed of every randomized suite
        :type seed: int
        :param output: path of the report, ``None`` for stdout
        :param format: ``"text"`` or ``"json"``
        """
        if format not in FORMATS:
            raise ConfigError('unknown format {0!r}, expected one of {1}'.format(format, FORMATS))
        for name, value in (('seed', seed), ('degree_bound', degree_bound),
                            ('sample_count', sample_count), ('corpus_size', corpus_size),
                            ('lattice_bound', lattice_bound), ('torus_points', torus_points)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ConfigError('{0} must be a nonnegative integer, got {1!r}'
                                  .format(name, value))
        self.seed = seed
        self.degree_bound = degree_bound
        self.sample_count = sample_count
        self.output = output
        self.format = format
        self.logfile = logfile
        self.corpus_size = corpus_size
        self.lattice_bound = lattice_bound
        self.torus_points = torus_points

    def __repr__(self):
        return 'RunConfig({0})'.format(', '.join('{0}={1!r}'.format(k, v)
                                                 for k, v in sorted(vars(self).items())))


def read_config(path=None):
    """
    Load the configuration module.

    :param path: explicitly requested file; it must exist. Without it
                 ``~/.hodgeflrc`` is read if present.
    :returns: the config module or ``None``
    :raises: :class:`ConfigError`
    """
    if path is None:
        path = os.path.expanduser(DEFAULT_CONFIG)
        if not os.path.isfile(path):
            log.debug('no configuration file at {0}'.format(path))
            return None
    elif not os.path.isfile(path):
        raise ConfigError('configuration file {0} does not exist'.format(path))
    try:
        return load_config(path)
    except (SyntaxError, ImportError, NameError) as e:
        raise ConfigError('cannot load configuration {0}: {1}'.format(path, e))


def make_config(config=None, args=None):
    """
    Merge defaults, the config module and the parsed command line.

    :param config: config module from :func:`read_config` or ``None``
    :param args: :class:`argparse.Namespace`; attributes left at ``None``
                 do not override
    :rtype: :class:`RunConfig`
    """
    values = {}
    for name, fallback in DEFAULTS.items():
        values[name.lower()] = get_config_attribute(config, name, fallback)
    if args is not None:
        for name in list(values) + ['output']:
            values[name] = default(getattr(args, name, None), values.get(name))
    return RunConfig(**values)
