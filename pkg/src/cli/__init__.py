"""
명령줄 인터페이스
"""
from src.cli.main import build_parser, run

__all__ = ["build_parser", "run"]
