"""Run the command line interface with ``python -m exchkit``."""

from exchkit.cli import main

raise SystemExit(main())
