import sys

from a5verify.commands.help import get_entrypoint
from a5verify.commands.help import get_parser
from a5verify.commands.help import main as help_main
from a5verify.streams import set_streams


def main(args=None, stdout=None, stderr=None):
    """Relay to the selected command, or to help without one."""
    set_streams(stdout=stdout, stderr=stderr)
    args = list(sys.argv[1:] if args is None else args)

    ns, _ = get_parser(add_help=False).parse_known_args(args)
    if ns.command:
        args.remove(ns.command)
    if not ns.command or ns.command == 'help':
        return help_main(args)

    entrypoint = get_entrypoint(ns.command)
    return entrypoint(args) if entrypoint else 1


if __name__ == '__main__':
    sys.exit(main())
