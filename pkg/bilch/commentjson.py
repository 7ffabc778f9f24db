# default modules
import json

# installed modules
# no modules

# project modules
# no modules


COMMENT_MARKERS = ('//', '#')


def __strip_comment(ln):
    # markers inside strings are kept; config values never contain
    # an unescaped quote followed by a marker
    in_string = False
    for i, ch in enumerate(ln):
        if ch == '"' and (i == 0 or ln[i - 1] != '\\'):
            in_string = not in_string
        elif not in_string and any(
                ln.startswith(m, i) for m in COMMENT_MARKERS):
            return ln[:i]
    return ln


def __load_from_lines(lines):
    cleaned_lines = []

    for ln in lines:
        ln = __strip_comment(ln.rstrip('\n')).strip()
        if ln != '':
            cleaned_lines.append(ln)

    if not cleaned_lines:
        return {}

    return json.loads('\n'.join(cleaned_lines))


def load(file_obj):
    """Parse a JSON document with '//' or '#' line comments from an
    open file; an empty document is an empty mapping."""
    try:
        return __load_from_lines(file_obj)
    except ValueError as e:
        e.args = (
            'error while parsing {} : "{}"'.format(
                getattr(file_obj, 'name', '<stream>'), e.args[0]),
        )
        raise e


def loads(text):
    return __load_from_lines(text.split('\n'))
