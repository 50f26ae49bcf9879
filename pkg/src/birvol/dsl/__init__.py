"""The scenario file language: parse, print, run."""

from .ast import Program
from .interp import DslValidationError, Interpreter, variable_index
from .lexer import DslSyntaxError, Span, tokenize
from .parser import parse, parse_expr
from .printer import print_expr, print_program, print_statement


def run_program(program: Program, *, seed: int = 42, source_name: str = "<dsl>"):
    """Bind everything (raising DslValidationError), then run every check."""
    it = Interpreter(program, source_name=source_name)
    it.bind_all()
    return it.run_checks(seed)


__all__ = [
    "DslSyntaxError",
    "DslValidationError",
    "Interpreter",
    "Program",
    "Span",
    "parse",
    "parse_expr",
    "print_expr",
    "print_program",
    "print_statement",
    "run_program",
    "tokenize",
    "variable_index",
]
