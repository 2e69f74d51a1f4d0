"""Poisson VQLS."""

import sys
from collections.abc import Sequence

from .application import Application


def main(argv: Sequence[str] | None = None) -> int:
    """Main function."""
    application = Application(argv)
    return application.run()


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        sys.exit(130)
