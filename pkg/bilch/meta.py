"""Status output in the "[tag] message" style, timing and pool error
reporting. Everything goes to stderr so that command output on stdout
stays byte-identical across runs."""

import sys
import time
import traceback
from functools import wraps

import termcolor


def time_formatter(seconds):
    if seconds > 3600:
        return '{:02.0f}:{:02.0f}:{:05.2f}'.format(
            seconds // 3600, (seconds % 3600) // 60, seconds % 60
        )

    elif seconds > 60:
        return '{:02.0f}:{:05.2f}'.format(
            (seconds % 3600) // 60, seconds % 60
        )
    else:
        return '{:.3f} s'.format(seconds)


class Printer(object):
    """Prints "[tag] message" lines.

    Status messages are printed only when the printer is on; warnings
    and errors are always printed, with a colored tag.
    """

    def __init__(self, tag='bilch', on=False, output=None):
        self.tag = tag
        self.on = on
        self._output = output

    @property
    def output(self):
        # resolved lazily so that redirected/captured stderr is honored
        return self._output if self._output is not None else sys.stderr

    def _emit(self, tag, message, color=None):
        tag_str = '[{}]'.format(tag)
        if color is not None:
            tag_str = termcolor.colored(tag_str, color)
        for ln in u'{}'.format(message).split('\n'):
            print('{} {}'.format(tag_str, ln), file=self.output)

    def __call__(self, message):
        if not self.on:
            return
        self._emit(self.tag, message)

    def warn(self, message):
        self._emit('warning', message, 'yellow')

    def error(self, message):
        self._emit('error', message, 'red')

    def clone(self, tag=None, on=None):
        return Printer(
            tag=self.tag if tag is None else tag,
            on=self.on if on is None else on,
            output=self._output
        )


SILENT = Printer(on=False)


class StatusPrinter(object):
    """Reports progress every print_every increments"""

    def __init__(self, printer, print_every=10000, comment=None,
                 total_cnt=None):
        self.printer = printer
        self.print_every = print_every
        self.cnt = 0
        self.total_cnt = total_cnt
        self.message = '{}:'.format(comment) if comment else ''
        self.start = time.time()

    def increase(self):
        self.cnt += 1
        if self.cnt % self.print_every == 0:
            self.report()

    def report(self):
        delta = time.time() - self.start
        status = (
            '{:.2%} ({:,})'.format(self.cnt / self.total_cnt, self.cnt)
            if self.total_cnt else '{:,}'.format(self.cnt)
        )
        self.printer('{} {} processed in {}'.format(
            self.message, status, time_formatter(delta)).strip())


def timer(func=None, printer=None, comment=None):
    """Times function func and reports "[timer] comment : elapsed"
    through printer (silent printers print nothing)."""

    if func is None:
        return time.time()

    local_printer = printer if printer is not None else SILENT
    local_comment = comment if comment is not None else func.__name__

    @wraps(func)
    def wrapper(*args, **kwargs):
        start = time.time()
        resp = func(*args, **kwargs)
        elapsed = time.time() - start
        local_printer.clone(tag='timer')(
            '{} : {}'.format(local_comment, time_formatter(elapsed)))
        return resp

    return wrapper


def error_wrapper_pool(method):
    """Make sure that pool workers report their full traceback
    when crashing."""

    @wraps(method)
    def wrapper(*args, **kwargs):
        try:
            resp = method(*args, **kwargs)
        except Exception as exception:
            trace = traceback.format_exception(*sys.exc_info())
            try:
                wrapped = exception.__class__(''.join(trace))
            except TypeError:
                raise exception
            raise wrapped
        return resp

    return wrapper
