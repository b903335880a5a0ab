import sys

stdout = sys.stdout
stderr = sys.stderr


def set_streams(stdout=None, stderr=None):
    """Redirect the output of commands, e.g. into a buffer for tests."""
    global_streams = globals()
    for name, stream in (('stdout', stdout), ('stderr', stderr)):
        if stream is not None:
            global_streams[name] = stream
