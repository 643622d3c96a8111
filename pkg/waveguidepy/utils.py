import sys
import os
import logging
from .core import ConfigError


def process_cmdLine(wgTask=None, argv=None):
    """Process command line arguments into a dict

    wgTask is needed in case we want to print the help
    text when -h is present

    """
    argv = sys.argv[1:] if argv is None else argv

    # The case of requesting help only; print and exit
    if len(argv) == 1 and argv[0] in ['-h', '--help']:
        print(wgTask._generate_fcn_docs())
        print(wgTask.task_docs())
        sys.exit(0)

    args = {}
    for val in argv:
        val_list = val.strip().split('=', 1)
        if len(val_list) == 1:
            raise ValueError(f'Unable to parse parameter {val}. Please use: param=value')
        args[val_list[0]] = val_list[1]

    # make verbose=1 default
    if not 'verbose' in args.keys():
        args['verbose'] = 1
    return args


def parse_keyvalue(lines, source='<string>'):
    """Parse flat key=value text, the same syntax as param=value on the command line

    Blank lines and lines starting with # are skipped; a # after the value
    starts a comment.

    Args:
        lines: iterable of text lines
        source: name used in error messages

    Returns:
        dict of {key: value-string} in document order

    """
    pairs = {}
    for iline, line in enumerate(lines):
        line = line.split('#', 1)[0].strip()
        if line == '':
            continue
        if not '=' in line:
            raise ConfigError(f'{source}:{iline+1}: expected key=value, got {line!r}')
        key, value = [x.strip() for x in line.split('=', 1)]
        if key == '':
            raise ConfigError(f'{source}:{iline+1}: empty key')
        if key in pairs:
            raise ConfigError(f'{source}:{iline+1}: duplicate key {key}')
        pairs[key] = value
    return pairs


def read_keyvalue(path):
    """Read a key=value document from a file

    I/O problems are re-raised as OSError naming the path.

    """
    try:
        with open(path, 'r') as fp:
            lines = fp.readlines()
    except OSError as err:
        raise OSError(f'cannot read {path}: {err.strerror or err}') from err
    return parse_keyvalue(lines, source=path)


def write_keyvalue(path, pairs, header=None):
    """Write a dict as key=value lines, in the dict order"""
    text = ''
    if header:
        text += ''.join([f'# {h}\n' for h in header.split('\n')])
    text += ''.join([f'{key}={value}\n' for key, value in pairs.items()])
    try:
        with open(path, 'w') as fp:
            fp.write(text)
    except OSError as err:
        raise OSError(f'cannot write {path}: {err.strerror or err}') from err
    logging.getLogger(__name__).debug(f'wrote {len(pairs)} keys to {path}')
