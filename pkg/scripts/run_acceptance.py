#!/usr/bin/env python3
"""Run the acceptance suite with one printed pass/fail line per criterion."""

import sys

import pytest

if __name__ == "__main__":
    sys.exit(pytest.main(["-s", "-q", "tests/test_acceptance.py", *sys.argv[1:]]))
