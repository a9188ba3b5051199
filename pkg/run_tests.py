#!/usr/bin/env python
"""Test runner script for the STIRAP shortcut engine."""

import argparse
import subprocess
import sys

TEST_DIRS = {
    "unit": "src/tests/unit",
    "integration": "src/tests/integration",
    "e2e": "src/tests/e2e",
    "all": "src/tests",
}


def run_command(cmd: list, cwd: str = None) -> int:
    """Run a command and return the exit code."""
    print(f"Running: {' '.join(cmd)}")
    result = subprocess.run(cmd, cwd=cwd)
    return result.returncode


def main():
    """Main test runner."""
    parser = argparse.ArgumentParser(description="Run tests for the STIRAP shortcut engine")
    parser.add_argument(
        "--type",
        choices=sorted(TEST_DIRS),
        default="all",
        help="Type of tests to run"
    )
    parser.add_argument(
        "--fast",
        action="store_true",
        help="Skip tests marked slow (long propagations and Monte Carlo batches)"
    )
    parser.add_argument(
        "--coverage",
        action="store_true",
        help="Run with coverage report"
    )
    parser.add_argument(
        "--failfast",
        "-x",
        action="store_true",
        help="Stop on first failure"
    )
    parser.add_argument(
        "--markers",
        "-m",
        help="Run tests matching given mark expression"
    )
    parser.add_argument(
        "--keyword",
        "-k",
        help="Run tests matching given keyword expression"
    )
    parser.add_argument(
        "--parallel",
        "-n",
        type=int,
        help="Number of parallel workers"
    )
    parser.add_argument(
        "--quality",
        action="store_true",
        help="Run mypy, flake8, black and isort after a green run"
    )

    args = parser.parse_args()

    cmd = ["python", "-m", "pytest", TEST_DIRS[args.type]]

    markers = args.markers
    if markers is None and args.type != "all":
        markers = args.type
    if args.fast:
        markers = f"({markers}) and not slow" if markers else "not slow"
    if markers:
        cmd.extend(["-m", markers])

    if args.coverage:
        cmd.extend([
            "--cov=src",
            "--cov-report=term-missing:skip-covered",
            "--cov-report=html:htmlcov",
        ])

    if args.failfast:
        cmd.append("-x")

    if args.keyword:
        cmd.extend(["-k", args.keyword])

    if args.parallel:
        cmd.extend(["-n", str(args.parallel)])

    print("=" * 60)
    print("STIRAP Shortcut Test Suite")
    print("=" * 60)

    exit_code = run_command(cmd)

    if exit_code != 0:
        print("\nTests failed!")
        return exit_code

    print("\nAll tests passed!")
    if args.quality:
        checks = [
            ["python", "-m", "mypy", "src", "--ignore-missing-imports"],
            ["python", "-m", "flake8", "src", "--max-line-length=120", "--exclude=src/tests"],
            ["python", "-m", "black", "--check", "--line-length=120", "src"],
            ["python", "-m", "isort", "--check-only", "src"],
        ]
        if any(run_command(check) != 0 for check in checks):
            print("\nSome code quality checks failed")
            exit_code = 1

    return exit_code


if __name__ == "__main__":
    sys.exit(main())
