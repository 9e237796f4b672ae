"""Command-line front end: configs, seed expressions, suites and reports."""
from .config import Config, build_module, load_config, parse_config
from .report import build_report, dumps, emit_report
from .seedexpr import parse_seed, render
from .suites import run_one

__all__ = ["Config", "build_module", "build_report", "dumps", "emit_report", "load_config",
           "parse_config", "parse_seed", "render", "run_one"]
