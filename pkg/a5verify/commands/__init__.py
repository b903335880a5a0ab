from .brown import BrownCommand
from .complex import ComplexCommand
from .coset_enum import CosetEnumCommand
from .exponent_matrix import ExponentMatrixCommand
from .jacobian import JacobianCommand
from .kernel_check import KernelCheckCommand
from .solve_universal import SolveUniversalCommand
from .verify_moduli import VerifyModuliCommand
from .word_identity import WordIdentityCommand

a5verify_commands = []
a5verify_commands.append(BrownCommand)
a5verify_commands.append(ComplexCommand)
a5verify_commands.append(CosetEnumCommand)
a5verify_commands.append(ExponentMatrixCommand)
a5verify_commands.append(JacobianCommand)
a5verify_commands.append(KernelCheckCommand)
a5verify_commands.append(SolveUniversalCommand)
a5verify_commands.append(VerifyModuliCommand)
a5verify_commands.append(WordIdentityCommand)

_commands = [c.command for c in a5verify_commands]
if len(_commands) != len(set(_commands)):
    raise RuntimeError(
        'Multiple commands share the same command name: ' +
        ', '.join(sorted(_commands)))


def resolve_command(name):
    """Return the command classes an exact name or a prefix selects."""
    for cmd in a5verify_commands:
        if cmd.command == name:
            return [cmd]
    return [cmd for cmd in a5verify_commands if cmd.command.startswith(name)]
