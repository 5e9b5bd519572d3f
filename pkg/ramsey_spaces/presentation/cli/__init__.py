from ramsey_spaces.presentation.cli.app import build_parser, run

__all__ = ["build_parser", "run"]
