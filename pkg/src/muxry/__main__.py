import sys

from muxry.cli import main

sys.exit(main())
