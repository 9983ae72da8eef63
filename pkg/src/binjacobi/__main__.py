import sys

from binjacobi.cli import main

sys.exit(main())
