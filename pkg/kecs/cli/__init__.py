"""
The ``kecs`` command line.
"""
from kecs.cli.main import main, run
from kecs.cli.output import ExitStatus

__all__ = ["ExitStatus", "main", "run"]
