"""
Structured event logging for long computations (scans, oracle runs,
verification suites), stored in a TinyDB document database.
"""
from __future__ import division, absolute_import

import json
import os
from collections import OrderedDict

from structlog import BoundLoggerBase, wrap_logger
from structlog.processors import KeyValueRenderer
from tinydb import TinyDB, where
from tinydb.middlewares import CachingMiddleware
from tinydb.storages import JSONStorage, MemoryStorage

__all__ = ['diagnostic_manager', 'load_log', 'filter_log', 'where']


class diagnostic_manager(object):
    def __init__(self, name, make_log=False, dbfilepath=None, dirpath='.',
                 filestream=None):
        """
        By default, does not create a log unless make_log=True.
        Log can be set with make_log() method after object created.

        filestream receives the key=value rendering of each event
        (None for silent logging into the database only).
        """
        self.name = name
        self._dirpath = dirpath
        self.log = None
        self.db = None
        if make_log:
            self.make_log(dbfilepath, filestream)

    def make_log(self, dbfilepath=None, filestream=None):
        """
        Resets and recreates log, using optional dbfilepath for
        TinyDB JSON output.
        """
        if dbfilepath is not None:
            dbfilepath = os.path.join(self._dirpath, dbfilepath)
        self.log = wrap_logger(EventPrintLogger(filestream=filestream,
                                                dbfilepath=dbfilepath),
                               wrapper_class=SemanticLogger,
                               processors=[ev_store, KeyValueRenderer(sort_keys=True)],
                               )
        self.log = self.log.bind(run=self.name)
        # reference to the database
        self.db = self.log._logger.db
        return self.log

    def get_events(self):
        try:
            return self.log._logger.event_list
        except AttributeError:
            raise AttributeError("Log not yet created")

    def close(self):
        if self.log is not None:
            self.log._logger.close()


class counter_util(object):
    def __init__(self):
        # will start at 1 when used
        self.n = 0

    def get_count(self):
        self.n += 1
        return self.n


def ev_store(logger, log_method, event_dict):
    logger.event = event_dict
    return event_dict


class SemanticLogger(BoundLoggerBase):
    def get_DB(self):
        return self._logger.db

    def msg(self, event, **kw):
        if 'status' not in kw:
            kw['status'] = 'ok'
        return self._proxy_to_logger('msg', event, **kw)

    def user_error(self, event, **kw):
        self.msg(event, status='user_error', **kw)

    def check_failed(self, event, **kw):
        self.msg(event, status='failed', **kw)

    def dump_events(self):
        return self._logger.event_list


class EventPrintLogger(object):
    """
    (Non-thread safe)
    Prints events into a stream AND stores the event structure internally
    as `event_list` attribute and in a TinyDB database.

    :param filestream: stream to print to, or None to print nothing
    :param dbfilepath: tinydb file path or None (default) for in-memory only
    """
    def __init__(self, filestream=None, dbfilepath=None):
        self._file = filestream
        # permanent
        self.event_list = []
        self.counter = counter_util()
        # ephemeral
        self.event = {}
        self._dbfilepath = dbfilepath
        self.db = make_DB(dbfilepath)

    def __repr__(self):
        return '<EventPrintLogger(file={0!r},dbfilepath={1!r})>'.format(
                                                self._file, self._dbfilepath)

    def msg(self, message):
        """
        Print *message* and commit insertion to the TinyDB database.
        """
        if self._file is not None:
            self._file.write(message + '\n')
            self._file.flush()
        self.event_list.append(self.event.copy())
        # this id will always be the same as tinydb's internal doc id
        db_dict = {'id': self.counter.get_count()}
        db_dict.update(self.event)
        self.db.insert(db_dict)

    def close(self):
        self.db.close()

    err = debug = info = warning = error = critical = log = msg


def filter_log(logdict, event, invert=False):
    """
    Filter a dictionary of log entries (loaded by load_log)
    by the named event, inverting (logical NOT) if the optional
    invert argument is True.
    """
    return OrderedDict((id, val) for id, val in logdict.items()
                       if (val['event'] == event) != invert)


def load_log(logpath):
    """
    Load a stored TinyDB JSON log into an OrderedDict keyed by integer id.
    """
    with open(logpath) as f:
        j = json.load(f)['_default']
    return OrderedDict(sorted((int(istr), val) for istr, val in j.items()))


def make_DB(filepath=None):
    """
    *filepath* to json document (e.g. 'path/to/db.json') else in-memory if
    none is provided.
    """
    if filepath:
        return TinyDB(filepath, storage=CachingMiddleware(JSONStorage))
    else:
        return TinyDB(storage=MemoryStorage)
