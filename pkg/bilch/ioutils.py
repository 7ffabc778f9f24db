import sys


def read_text(path):
    """Returns the content of path; "-" reads standard input.
    OSError and UnicodeDecodeError propagate to the caller."""
    if path == '-':
        return sys.stdin.read()
    with open(path, encoding='utf-8') as f:
        return f.read()


def write_text(stream, text):
    """Writes text to stream, making sure it ends with a newline"""
    if not text.endswith('\n'):
        text += '\n'
    stream.write(text)
