"""
Run the command-line interface with python -m cvq_kernel.
"""
import sys

from cvq_kernel.cli import main

if __name__ == "__main__":
    sys.exit(main())
