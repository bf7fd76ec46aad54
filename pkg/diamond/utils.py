#!/usr/bin/env python
# -*- coding: utf-8 -*-
# utils.py - Oct 2026
# License: MIT - see the LICENSE file for the full text.

'''This contains various utility functions and classes for diamond.

'''

import json
import signal
from enum import Enum

import numpy as np

# the standard library executor has had the initializer and initargs kwargs
# since Python 3.7, which is all the search workers need.
from concurrent.futures import ProcessPoolExecutor
ProcExecutor = ProcessPoolExecutor


def setup_worker():
    '''This sets up the workers to ignore the INT signal, which is handled by
    the main process.

    '''
    # unregister interrupt signals so they don't get to the worker
    # and the executor can kill them cleanly (hopefully)
    signal.signal(signal.SIGINT, signal.SIG_IGN)


class ResultEncoder(json.JSONEncoder):
    '''
    This handles encoding weird things.

    '''

    def default(self, obj):

        if isinstance(obj, np.ndarray):
            return obj.tolist()
        elif isinstance(obj, (set, frozenset)):
            return sorted(obj)
        elif isinstance(obj, Enum):
            return obj.value
        elif isinstance(obj, np.bool_):
            return bool(obj)
        elif isinstance(obj, (np.int8, np.int16, np.int32, np.int64)):
            return int(obj)
        else:
            return json.JSONEncoder.default(self, obj)
