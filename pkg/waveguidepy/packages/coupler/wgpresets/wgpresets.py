#!/usr/bin/env python


import sys
import waveguidepy as wgp


if __name__ == '__main__':
    task = wgp.PresetsTask(name='wgpresets')
    cmd_args = wgp.utils.process_cmdLine(task)
    result = task(**cmd_args)
    sys.exit(result.returncode)
