"""
Collection of useful functions and classes: formatted messages, timing and progress bars.
"""

from datetime import timedelta
import enum
import functools
import os
import sys
import time
from typing import Iterable, Optional

from tqdm import tqdm


class MessageType(enum.Enum):
    """
    Specifies the type of output messages.

    Parameters
    ----------
    enum : enum.Enum
        base enum class
    """
    INFO = 0
    WARNING = 1
    ERROR = 2

    def __str__(self):
        return self.name


COLORS_ENABLED = False
VERBOSE = False
WARNING_MESSAGES = []
ERROR_MESSAGES = []
EXCEPTION_MESSAGES = []


def _get_message_prefix(message_type: MessageType):
    """ Generates prefix for info messages,
        containing the message type and the current time.

    Parameters
    ----------
    message_type : MessageType
        Type of the message: info, warning or error

    Returns
    -------
    [str]
        Message prefix, possibly with a color code
    """
    result = f"[{message_type}--{time_now()}]"
    if COLORS_ENABLED:
        color_codes = {MessageType.INFO: "34", MessageType.WARNING: "93", MessageType.ERROR: "31"}
        result = f"\033[{color_codes[message_type]}m{result}\033[0m"
    return result


def _emit(text: str):
    # stdout is reserved for command results
    print(text, file=sys.stderr, flush=True)


def print_info_message(message: str, level: int = 1):
    """
    Prints an informational message in a defined format.
    Messages with a level of 2 or above are only shown in verbose mode.

    Parameters
    ----------
    message : str
        message to print
    level : int, optional
        message indent level, by default 1 (0 = title, 1 or above = regular messages)
    """
    if level >= 2 and not VERBOSE:
        return
    indent_level = "===" if level == 0 else level * "--"
    formatted_message = f"{indent_level}> {message}"
    if level == 0:
        formatted_message = formatted_message.upper()
    _emit(f"{_get_message_prefix(MessageType.INFO)} {formatted_message}")


def print_warning_message(message: str):
    """
    Prints a warning message in a defined format.

    Parameters
    ----------
    message : str
        message to print
    """
    WARNING_MESSAGES.append(message)
    _emit(f"{_get_message_prefix(MessageType.WARNING)} {message}  -- [TOTAL WARNINGS]: {len(WARNING_MESSAGES)}")


def print_error_message(message: str):
    """
    Prints an error message in a defined format.

    Parameters
    ----------
    message : str
        message to print
    """
    ERROR_MESSAGES.append(message)
    _emit(f"{_get_message_prefix(MessageType.ERROR)} {message}  -- [TOTAL ERRORS]: {len(ERROR_MESSAGES)}")


def print_exception_message(message: str, print_full_traceback: bool = False):
    """
    Prints an exception message in a defined format.
    Must be called from inside an ``except`` block.

    Parameters
    ----------
    message : str
        message to print
    print_full_traceback : bool, optional
        print the local variables of the innermost frame, by default False
    """
    EXCEPTION_MESSAGES.append(message)
    exc_type, _, exc_tb = sys.exc_info()
    if exc_tb is not None:
        innermost = exc_tb
        while innermost.tb_next is not None:
            innermost = innermost.tb_next
        fname = os.path.split(innermost.tb_frame.f_code.co_filename)[1]
        _emit(f"{exc_type.__name__} in {fname}:{innermost.tb_lineno}")
        if print_full_traceback and VERBOSE:
            _emit(str(innermost.tb_frame.f_locals))
    _emit(f"{_get_message_prefix(MessageType.ERROR)} {message} -- [TOTAL EXCEPTIONS]: {len(EXCEPTION_MESSAGES)}")


def print_final_statistics(start_time: float, end_time: float):
    print_info_message("===== EXECUTION STATS ==========")
    print_info_message(f"Warnings       : {len(WARNING_MESSAGES):,}")
    print_info_message(f"Errors         : {len(ERROR_MESSAGES):,}")
    print_info_message(f"Exceptions     : {len(EXCEPTION_MESSAGES):,}")
    print_info_message(f"Execution time : {str(timedelta(seconds=round(end_time - start_time)))}")
    print_info_message("================================")
    print_info_message("Done.", 0)


def reset_counters():
    """
    Clears the warning, error and exception counters.
    """
    WARNING_MESSAGES.clear()
    ERROR_MESSAGES.clear()
    EXCEPTION_MESSAGES.clear()


def timeit(method):
    """
    Computes the execution time of the provided method.
    If the call passes a ``log_time`` dictionary, the time in milliseconds is stored
    under ``log_name`` (default: upper-cased method name) instead of being printed.

    Parameters
    ----------
    method : callable
        method for which the execution time has to be calculated
    """
    @functools.wraps(method)
    def timed(*args, log_time: Optional[dict] = None, log_name: Optional[str] = None, **kw):
        time_start = time.perf_counter()
        result = method(*args, **kw)
        elapsed_ms = (time.perf_counter() - time_start) * 1000
        if log_time is not None:
            log_time[log_name or method.__name__.upper()] = elapsed_ms
        else:
            print_info_message(f"{method.__name__} {elapsed_ms:.2f} ms", 2)
        return result
    return timed


def progress_bar(iterable: Optional[Iterable] = None, total: Optional[int] = None, desc: str = ""):
    """
    Wraps an iterable into a tqdm progress bar written to stderr.
    The bar is disabled when not in verbose mode.

    Parameters
    ----------
    iterable : Iterable, optional
        iterable to decorate
    total : int, optional
        expected number of iterations
    desc : str, optional
        bar description

    Returns
    -------
    tqdm
        the progress bar
    """
    return tqdm(iterable, total=total, desc=desc, file=sys.stderr, disable=not VERBOSE, leave=False)


def time_now():
    """
    Provides the current time.

    Returns
    -------
    String
        current time
    """
    return time.strftime("%H:%M:%S", time.localtime())
