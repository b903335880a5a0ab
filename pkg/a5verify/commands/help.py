import argparse
import importlib
import sys

from a5verify.commands import a5verify_commands
from a5verify.commands import resolve_command
from a5verify.streams import set_streams

EXIT_CODES = (
    'Every command runs a set of exact checks and exits with 0 when all '
    'of them pass,\n1 when a check fails, 2 on invalid input and 3 when '
    'the coset budget is exhausted.')


def main(args=None, stdout=None, stderr=None):
    set_streams(stdout=stdout, stderr=stderr)
    from a5verify.streams import stdout

    # a named command prints its own help
    ns, _ = get_parser(add_help=False).parse_known_args(args)
    if ns.command:
        entrypoint = get_entrypoint(ns.command)
        return entrypoint(['--help']) if entrypoint else 1

    parser = get_parser()
    ns = parser.parse_args(args)
    if ns.commands:
        print(' '.join(cmd.command for cmd in a5verify_commands),
              file=stdout)
    elif ns.commands_descriptions:
        for cmd in a5verify_commands:
            print('%s\t%s' % (cmd.command, cmd.help), file=stdout)
    else:
        parser.print_help(file=stdout)
    return 0


def get_parser(add_help=True):
    from a5verify import __version__
    parser = argparse.ArgumentParser(
        prog='a5v', usage='%(prog)s <command> [<args>]',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        description=EXIT_CODES + '\n\n' + format_command_list(),
        epilog="See '%(prog)s <command> --help' for the arguments of a "
        'command.', add_help=add_help)
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        'command', metavar='<command>', nargs='?',
        help='A command name or a unique prefix of one')
    group.add_argument(
        '--commands', action='store_true', default=False,
        help='Output the available commands for auto-completion')
    group.add_argument(
        '--commands-descriptions', action='store_true', default=False,
        help='Output the available commands along with their descriptions')
    group.add_argument(
        '--version', action='version', version='%(prog)s ' + __version__,
        help='Show the a5verify version')
    return parser


def format_command_list():
    width = max(len(cmd.command) for cmd in a5verify_commands)
    return '\n'.join(
        ['The available commands are:'] +
        ['   %-*s   %s' % (width, cmd.command, cmd.help)
         for cmd in a5verify_commands])


def get_entrypoint(name):
    """Return the main function of the command name selects, or None."""
    from a5verify.streams import stderr
    matches = resolve_command(name)
    if len(matches) == 1:
        return importlib.import_module(matches[0].__module__).main
    print("a5v: '%s' is not an a5v command. See 'a5v help'." % name,
          file=stderr)
    if matches:
        print('\nDid you mean one of these?\n   ' + '\n   '.join(
            cmd.command for cmd in matches), file=stderr)
    return None


if __name__ == '__main__':
    sys.exit(main())
