import sys

from gengraph.cli import main

sys.exit(main())
