"""
Common utilities for fatflats: argument checking, parsing of
integer lists given on the command line, and YAML configuration.

"""
from __future__ import division, absolute_import

import copy
import os
import re

import yaml

__all__ = ['FatFlatValueError', 'checked_int', 'checked_mults',
           'parse_int_list', 'load_config', 'default_config_path']


class FatFlatValueError(ValueError):
    """
    Raised when an argument violates an operation's precondition.
    """
    pass


_INT_RE = re.compile(r'^[+-]?\d+$')

_CONFIG_SECTIONS = ('oracle', 'scan', 'verify', 'log')


def default_config_path():
    return os.path.join(os.path.dirname(__file__), 'defaults.yaml')


def checked_int(name, value, lo=None, hi=None):
    """Internal utility to verify an integer argument lies in [lo, hi]
    (either bound may be None). Booleans are not accepted as integers.
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError("%s must be an integer, got %r" % (name, value))
    if lo is not None and value < lo:
        raise FatFlatValueError("%s must be >= %i, got %i" % (name, lo, value))
    if hi is not None and value > hi:
        raise FatFlatValueError("%s must be <= %i, got %i" % (name, hi, value))
    return value


def checked_mults(mults, allow_negative=False):
    """Internal utility to verify a sequence of multiplicities.
    Returns a tuple of ints.
    """
    try:
        out = tuple(mults)
    except TypeError:
        raise TypeError("multiplicities must be a sequence of integers")
    for m in out:
        if isinstance(m, bool) or not isinstance(m, int):
            raise TypeError("multiplicity must be an integer, got %r" % (m,))
        if m < 0 and not allow_negative:
            raise FatFlatValueError("multiplicities must be >= 0, got %i" % m)
    return out


def parse_int_list(text):
    """
    Parse a comma separated list of decimal integers, e.g. "3,3,-1".
    The empty string gives the empty tuple.
    """
    text = text.strip()
    if text == '':
        return ()
    out = []
    for part in text.split(','):
        part = part.strip()
        if not _INT_RE.match(part):
            raise FatFlatValueError("Not a decimal integer: %r" % part)
        out.append(int(part))
    return tuple(out)


def parse_int(text):
    text = text.strip()
    if not _INT_RE.match(text):
        raise FatFlatValueError("Not a decimal integer: %r" % text)
    return int(text)


def _merge(base, override):
    for key, val in override.items():
        if val is None and isinstance(base.get(key), dict):
            # empty section in the user file
            continue
        if isinstance(val, dict) and isinstance(base.get(key), dict):
            _merge(base[key], val)
        else:
            base[key] = val
    return base


_defaults = None

def load_config(path=None):
    """
    Return the configuration dictionary: shipped defaults, with the YAML
    file at *path* (if given) merged over them.
    """
    global _defaults
    if _defaults is None:
        with open(default_config_path()) as f:
            _defaults = yaml.safe_load(f)
    config = copy.deepcopy(_defaults)
    if path is None:
        return config
    with open(path) as f:
        user = yaml.safe_load(f) or {}
    if not isinstance(user, dict):
        raise FatFlatValueError("Configuration file must hold a mapping: %s" % path)
    for section in user:
        if section not in _CONFIG_SECTIONS:
            raise FatFlatValueError("Unknown configuration section: %s" % section)
        if user[section] is None:
            continue
        if not isinstance(user[section], dict):
            raise FatFlatValueError("Configuration section %s must be a mapping"
                                    % section)
        for key in user[section]:
            if key not in config[section]:
                raise FatFlatValueError("Unknown configuration key: %s.%s"
                                        % (section, key))
    return _merge(config, user)
