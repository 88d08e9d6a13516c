from ginv.commands import sft, tables
from ginv.commands.runner import HANDLERS, Settings, run


def get_commands():
    return sft.get_commands() + tables.get_commands()


__all__ = ['HANDLERS', 'Settings', 'get_commands', 'run']
