"""
This module deals with logging in hodgefl.

Reports are written to stdout, so every handler installed here writes to
stderr or to a logfile.

 :copyright: hodgefl Developers, see AUTHORS
 :license: MIT License, see LICENSE
"""
import logging
from logging.handlers import RotatingFileHandler


FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'


def configure_logging(level=logging.INFO, logfile=None):  # pragma: no cover
    """
    Configure the root logger for our purposes.

    :param level: log level of the root logger
    :type level: int
    :param logfile: path of a logfile that is rotated on every run
    :type logfile: str
    """
    logging.root.setLevel(level)
    formatter = logging.Formatter(FORMAT)
    ch = logging.StreamHandler()
    ch.setFormatter(formatter)
    logging.root.addHandler(ch)

    if logfile:
        ch2 = RotatingFileHandler(logfile, backupCount=10)
        ch2.doRollover()
        ch2.setFormatter(formatter)
        logging.root.addHandler(ch2)


def configure_for_tests():
    """
    Configure the root logger to be silent.
    """
    logging.root.handlers = []
    logging.root.addHandler(logging.NullHandler())
